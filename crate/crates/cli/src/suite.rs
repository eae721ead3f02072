//! The named check suite: every explicit identity and example the library
//! reproduces, one check each.

use std::collections::BTreeSet;

use num_rational::BigRational;

use hurwitz_core::exec::Executor;
use hurwitz_core::field::{discriminant_for_rule, trace_gram, trace_powers, ETA_CUBE};
use hurwitz_core::group::generators::{g2, g3, g7, order_generation_check};
use hurwitz_core::group::quotient::{genus_of, quotient_report};
use hurwitz_core::group::systole::{systole_bfs, systole_lattice_auto};
use hurwitz_core::ideal::{factor_rational_prime, min_poly_roots_mod};
use hurwitz_core::order::{inverted_two_equality, order_index, reduced_discriminant, Lattice};
use hurwitz_core::quat::{is_hamilton_at, norm_form_at, NormForm};
use hurwitz_core::residue::{
    anticommuting_pair_obstruction, build_residue_ring, o_mod_2_structure, reduce,
    solve_norm_equation, split, split_even, verify_azumaya_fiber, ResidueRing,
};
use hurwitz_core::{FieldElem, IdealK, Order, Place, Precision, QuatElem, Result};

use crate::cert::{Certificate, Check};
use crate::parse::{parse_element, parse_quat, Parsed};

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    /// Substring matched against check groups and names.
    pub filter: Option<String>,
    /// Reduction rule eta^3 = r0 + r1 eta + r2 eta^2 used by the discriminant check.
    pub eta_rule: [i64; 3],
    pub precision: Precision,
    pub max_word_length: u32,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            filter: None,
            eta_rule: ETA_CUBE,
            precision: Precision::DEFAULT,
            max_word_length: hurwitz_core::group::systole::DEFAULT_MAX_WORD_LENGTH,
        }
    }
}

/// Outcome of a check body: pass flag and witness text.
type Outcome = Result<(bool, String)>;

struct Ctx<'a, E: Executor> {
    opts: &'a SuiteOptions,
    exec: &'a E,
}

type CheckFn<E> = fn(&Ctx<'_, E>) -> Outcome;

fn fe(a: i64, b: i64, c: i64) -> FieldElem {
    FieldElem::from_ints(a, b, c)
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn ideal(a: i64, b: i64, c: i64) -> IdealK {
    IdealK::new(fe(a, b, c)).expect("nonzero integral generator")
}

fn local(i: &IdealK) -> Result<ResidueRing> {
    Ok(build_residue_ring(i)?.components()[0].clone())
}

fn ok(passed: bool, witness: impl Into<String>) -> Outcome {
    Ok((passed, witness.into()))
}

/// 3 - eps + eps^2 with eps = eta - 2.
fn klein_root(r: &ResidueRing) -> hurwitz_core::residue::Residue {
    let eps = r.sub(&r.eta(), &r.from_int(2));
    r.add(&r.sub(&r.from_int(3), &eps), &r.mul(&eps, &eps))
}

fn triplet() -> [IdealK; 3] {
    [ideal(-1, 2, 0), ideal(3, -2, 0), ideal(3, 1, 0)]
}

fn checks<E: Executor>() -> Vec<(&'static str, &'static str, CheckFn<E>)> {
    vec![
        ("field", "ramified_generator_cubed", |_| {
            let lhs = fe(2, -1, 0).pow(3);
            let rhs = fe(7, -14, 7);
            ok(
                lhs == rhs && rhs == &FieldElem::from_int(7) * &fe(-1, 1, 0).pow(2),
                format!("(2 - eta)^3 = {lhs}"),
            )
        }),
        ("field", "eta_minus_one_is_unit", |_| {
            let p = &fe(-1, 1, 0) * &fe(0, 2, 1);
            ok(p.is_one(), format!("(eta - 1)(eta^2 + 2eta) = {p}"))
        }),
        ("field", "eta_is_unit", |_| {
            let p = &FieldElem::eta() * &fe(-2, 1, 1);
            ok(p.is_one(), format!("eta (eta^2 + eta - 2) = {p}"))
        }),
        ("field", "traces_of_eta_and_eta_squared", |_| {
            let t = [FieldElem::eta().trace(), FieldElem::eta().pow(2).trace()];
            ok(
                t == [rat(-1), rat(5)],
                format!("Tr(eta) = {}, Tr(eta^2) = {}", t[0], t[1]),
            )
        }),
        ("field", "traces_of_eta_cubed_and_fourth", |_| {
            let t = [
                FieldElem::eta().pow(3).trace(),
                FieldElem::eta().pow(4).trace(),
            ];
            ok(
                t == [rat(-4), rat(13)],
                format!("Tr(eta^3) = {}, Tr(eta^4) = {}", t[0], t[1]),
            )
        }),
        ("field", "discriminant_is_49", |c| {
            let d = discriminant_for_rule(c.opts.eta_rule);
            ok(
                d == 49,
                format!("disc = {d} (expected 49) for rule {:?}", c.opts.eta_rule),
            )
        }),
        ("field", "trace_gram_matrix", |c| {
            let g = trace_gram(c.opts.eta_rule);
            ok(
                g == [[3, -1, 5], [-1, 5, -4], [5, -4, 13]],
                format!("{g:?}"),
            )
        }),
        ("field", "other_embeddings_negative", |c| {
            let v: Vec<_> = [Place::Sigma1, Place::Sigma2]
                .iter()
                .map(|&p| FieldElem::eta().embed(p, c.opts.precision))
                .collect();
            let natural = FieldElem::eta().embed(Place::Natural, c.opts.precision);
            ok(
                v.iter().all(|x| x.is_negative()) && !natural.is_negative(),
                format!(
                    "sigma1 = {:.6}, sigma2 = {:.6}",
                    v[0].to_f64(),
                    v[1].to_f64()
                ),
            )
        }),
        ("field", "thirteen_splits_completely", |_| {
            let f = factor_rational_prime(13)?;
            let expected = triplet();
            let found: Vec<&IdealK> = f.factors.iter().map(|p| &p.ideal).collect();
            let matches = expected.iter().all(|e| found.contains(&e));
            let unramified = f.factors.iter().all(|p| p.e == 1 && p.f == 1);
            let product = &(&(&FieldElem::eta() * &fe(2, 1, 0)) * &fe(-1, 2, 0))
                * &(&fe(3, -2, 0) * &fe(3, 1, 0));
            let unit = (&FieldElem::eta() * &fe(2, 1, 0)).is_unit();
            ok(
                f.factors.len() == 3
                    && matches
                    && unramified
                    && product == FieldElem::from_int(13)
                    && unit,
                format!(
                    "13 = eta(eta + 2)(2eta - 1)(3 - 2eta)(eta + 3); {} primes",
                    f.factors.len()
                ),
            )
        }),
        ("field", "seven_totally_ramified", |_| {
            let f = factor_rational_prime(7)?;
            let p = &f.factors[0];
            ok(
                f.factors.len() == 1 && p.e == 3 && p.f == 1 && p.ideal == ideal(2, -1, 0),
                format!("7 = {}^{}", p.ideal, p.e),
            )
        }),
        ("field", "two_is_inert", |_| {
            let f = factor_rational_prime(2)?;
            let p = &f.factors[0];
            ok(
                f.factors.len() == 1 && p.e == 1 && p.f == 3,
                format!("2: e = {}, f = {}", p.e, p.f),
            )
        }),
        ("quaternion", "j_prime_squared", |_| {
            let jp = QuatElem::j_prime();
            let rhs = &jp + &QuatElem::scalar(fe(1, 3, 0));
            ok(&jp * &jp == rhs, format!("j'^2 = {}", &jp * &jp))
        }),
        ("quaternion", "j_prime_times_i", |_| {
            let (jp, i) = (QuatElem::j_prime(), QuatElem::i());
            let rhs = &(&QuatElem::scalar(fe(0, 0, 1)) + &i) - &(&i * &jp);
            ok(&jp * &i == rhs, format!("j' i = {}", &jp * &i))
        }),
        ("quaternion", "j_prime_trace_and_norm", |_| {
            let jp = QuatElem::j_prime();
            let (t, n) = (jp.reduced_trace(), jp.reduced_norm());
            ok(
                t.is_one() && n == fe(-1, -3, 0),
                format!("trd = {t}, nrd = {n}"),
            )
        }),
        ("quaternion", "definite_at_sigma1_and_sigma2", |_| {
            ok(
                is_hamilton_at(Place::Sigma1) && is_hamilton_at(Place::Sigma2),
                "norm form definite at both",
            )
        }),
        ("quaternion", "split_at_natural_place", |_| {
            ok(
                norm_form_at(Place::Natural) == NormForm::Indefinite,
                "norm form indefinite at sigma0",
            )
        }),
        ("orders", "j_coordinates_in_elkies", |_| {
            let c = Order::elkies().coords(&QuatElem::j());
            let seventh = |a, b, d| &fe(a, b, d) * &FieldElem::from_fraction(1, 7);
            let expected = [
                seventh(-9, 2, 3),
                seventh(3, -3, -1),
                seventh(18, -4, -6),
                FieldElem::zero(),
            ];
            let text: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            ok(c == expected, format!("({})", text.join(", ")))
        }),
        ("orders", "i_from_generators_is_integral", |_| {
            let i = (&(&g3() * &g2()) - &(&g2() * &g3())).scale(&fe(1, 1, 0));
            let cert = Order::hurwitz().contains(&i);
            ok(
                i == QuatElem::i() && cert.member,
                "i = (1 + eta)(g3 g2 - g2 g3) in Q_Hur",
            )
        }),
        ("orders", "j_not_in_elkies", |_| {
            let cert = Order::elkies().contains(&QuatElem::j());
            ok(!cert.member, "a coordinate has denominator 7")
        }),
        ("orders", "j_and_j_prime_in_hurwitz", |_| {
            let hur = Order::hurwitz();
            ok(
                hur.contains(&QuatElem::j()).member && hur.contains(&QuatElem::j_prime()).member,
                "both integral",
            )
        }),
        ("orders", "hurwitz_over_standard_index_64", |_| {
            let n = order_index(Order::hurwitz().lattice(), Order::standard().lattice())?;
            ok(n == 64.into(), format!("[Q_Hur : O] = {n}"))
        }),
        ("orders", "half_standard_over_hurwitz_index_64", |_| {
            let n = order_index(&Lattice::half_standard(), Order::hurwitz().lattice())?;
            ok(n == 64.into(), format!("[O/2 : Q_Hur] = {n}"))
        }),
        ("orders", "no_anticommuting_generators", |_| {
            let o = anticommuting_pair_obstruction()?;
            ok(
                o.holds(),
                "Q_Hur/2 is noncommutative while anticommuting pairs commute mod 2",
            )
        }),
        ("orders", "i_and_j_commute_mod_2", |_| {
            let o = anticommuting_pair_obstruction()?;
            ok(o.standard_i_j_commute, "ij - ji = 2ij lies in 2O")
        }),
        ("orders", "inverting_two_identifies_orders", |_| {
            ok(inverted_two_equality(), "2 Q_Hur in O in Q_Hur")
        }),
        ("orders", "hurwitz_discriminant_is_unit", |_| {
            let d = reduced_discriminant(&Order::hurwitz())?;
            let inv = d.determinant.inverse()?;
            ok(
                d.reduced.is_unit_ideal() && inv.is_integral(),
                format!("Gram det {}, inverse {}", d.determinant, inv),
            )
        }),
        ("orders", "standard_discriminant_is_four", |_| {
            let d = reduced_discriminant(&Order::standard())?;
            ok(
                d.reduced == IdealK::from_int(4)?,
                format!("d(O) = {}", d.reduced),
            )
        }),
        ("residue", "two_gives_f8", |_| {
            let r = local(&IdealK::from_int(2)?)?;
            let e = r.eta();
            let f = r.add(&r.add(&r.pow(&e, 3), &r.pow(&e, 2)), &r.one());
            ok(
                r.size() == 8 && r.is_zero(&f) && min_poly_roots_mod(2).is_empty(),
                "eta^3 + eta^2 + 1 = 0 in F_8, no root mod 2",
            )
        }),
        ("residue", "seven_gives_truncated_polynomials", |_| {
            let r = local(&IdealK::from_int(7)?)?;
            let c = r.epsilon_coords(&r.eta());
            ok(
                r.size() == 343 && c == Some([2, 1, 0]),
                format!("eta -> {:?} in F_7[eps]/(eps^3)", c),
            )
        }),
        ("residue", "two_eta_minus_one_sends_eta_to_7", |_| {
            let r = local(&ideal(-1, 2, 0))?;
            ok(
                r.size() == 13 && r.eta().0 == [7, 0, 0],
                format!("eta -> {}", r.display(&r.eta())),
            )
        }),
        ("residue", "norm_solution_mod_two_eta_minus_one", |_| {
            let sol = solve_norm_equation(&local(&ideal(-1, 2, 0))?)?;
            ok(
                (sol.a.0[0], sol.b.0[0]) == (1, 1),
                format!("(a, b) = ({}, {})", sol.a.0[0], sol.b.0[0]),
            )
        }),
        ("residue", "norm_solution_mod_eta_plus_three", |_| {
            let sol = solve_norm_equation(&local(&ideal(3, 1, 0))?)?;
            ok(
                (sol.a.0[0], sol.b.0[0]) == (6, 0),
                format!("(a, b) = ({}, {})", sol.a.0[0], sol.b.0[0]),
            )
        }),
        ("residue", "square_root_of_two_plus_eps", |_| {
            let r = local(&IdealK::from_int(7)?)?;
            let root = klein_root(&r);
            let sq = r.mul(&root, &root);
            ok(
                r.epsilon_coords(&sq) == Some([2, 1, 0]),
                "(3 - eps + eps^2)^2 = 2 + eps",
            )
        }),
        ("residue", "i_image_mod_two_eta_minus_one", |_| {
            let s = split(&ideal(-1, 2, 0))?;
            let m = reduce(&QuatElem::i(), &s)?;
            let r = s.components()[0].ring();
            ok(
                m[0].0.map(|x| x.0) == [[0; 3], [1, 0, 0], [7, 0, 0], [0; 3]],
                m[0].display(r),
            )
        }),
        ("residue", "klein_quartic_split_images", |_| {
            let s = split(&IdealK::from_int(7)?)?;
            let c = &s.components()[0];
            let r = c.ring();
            let (x, y) = c.generator_images();
            let root = klein_root(r);
            let i_ok = x.0 == [r.zero(), r.one(), r.eta(), r.zero()];
            let j_ok = y.0 == [root, r.zero(), r.zero(), r.neg(&root)];
            ok(
                i_ok && j_ok,
                format!("i -> {}, j -> {}", x.display(r), y.display(r)),
            )
        }),
        ("residue", "hurwitz_mod_two_is_m2_f8", |_| {
            let s = split_even(1)?;
            let c = &s.components()[0];
            let size = c.generated_subring_size();
            ok(
                c.relations_hold() && size == Some(4096),
                format!("image has {size:?} elements"),
            )
        }),
        ("residue", "thirteen_splits_into_three_factors", |_| {
            let s = split(&IdealK::from_int(13)?)?;
            let m = reduce(&QuatElem::i(), &s)?;
            let lower: Vec<i64> = m.iter().map(|x| x.0[2].0[0]).collect();
            ok(
                s.components().len() == 3 && lower == [7, 8, 10],
                format!("i -> [[0,1],[t,0]] for t in {lower:?}"),
            )
        }),
        ("residue", "thirteen_j_images", |_| {
            let s = split(&IdealK::from_int(13)?)?;
            let m = reduce(&QuatElem::j(), &s)?;
            let got: Vec<[i64; 4]> = m.iter().map(|x| x.0.map(|e| e.0[0])).collect();
            ok(
                got == [[1, 1, 6, 12], [4, 1, 5, 9], [6, 0, 0, 7]],
                format!("{got:?}"),
            )
        }),
        ("residue", "standard_mod_two_radical_dims", |_| {
            let d = o_mod_2_structure()?;
            ok(
                d.radical_dims == [3, 1, 0],
                format!("dims J, J^2, J^3 = {:?}", d.radical_dims),
            )
        }),
        ("residue", "standard_mod_two_commutative", |_| {
            let d = o_mod_2_structure()?;
            ok(d.commutative, format!("{} elements", d.size))
        }),
        ("residue", "frobenius_fixes_eta_mod_two", |_| {
            let r = local(&IdealK::from_int(2)?)?;
            let e = r.eta();
            ok(
                r.pow(&e, 8) == e && o_mod_2_structure()?.frobenius_fixes_eta,
                "eta^8 = eta in F_8",
            )
        }),
        ("residue", "azumaya_fibers_over_13", |_| {
            let all = triplet()
                .iter()
                .map(verify_azumaya_fiber)
                .collect::<Result<Vec<bool>>>()?;
            ok(all.iter().all(|&b| b), format!("{all:?}"))
        }),
        ("residue", "azumaya_fiber_at_seven", |_| {
            ok(
                verify_azumaya_fiber(&ideal(2, -1, 0))?,
                "Q_Hur/P = M_2(F_7)",
            )
        }),
        ("residue", "azumaya_fiber_at_two", |_| {
            ok(
                verify_azumaya_fiber(&IdealK::from_int(2)?)?,
                "Q_Hur/2 = M_2(F_8)",
            )
        }),
        ("group", "g2_squared_is_minus_one", |_| {
            let m = QuatElem::from_int(-1);
            ok(
                g2().pow(2) == m && g3().pow(3) == m && g7().pow(7) == m,
                "g2^2 = g3^3 = g7^7 = -1",
            )
        }),
        ("group", "g7_g3_is_g2", |_| {
            ok(&g7() * &g3() == g2(), "g7 g3 = g2")
        }),
        ("group", "presentation_relations", |_| {
            let (a, b) = (g2(), g3());
            let square = b.pow(2) == &b - &QuatElem::one();
            let anti = &(&a * &b) + &(&b * &a) == &a - &QuatElem::scalar(fe(-1, 1, 1));
            ok(
                square && anti,
                "g3^2 = g3 - 1, g2 g3 + g3 g2 = g2 - (eta^2 + eta - 1)",
            )
        }),
        ("group", "j_from_generators", |_| {
            ok(
                order_generation_check().j_from_generators,
                "j = (1 + eta)(1 + (eta^2 + eta - 1) g2 - 2 g3)",
            )
        }),
        ("group", "j_prime_from_generators", |_| {
            ok(
                order_generation_check().j_prime_from_generators,
                "j' = (1 + eta i) g3 + (eta^2 - 2) ij + j",
            )
        }),
        ("group", "g3_in_alternative_basis", |_| {
            ok(
                order_generation_check().g3_in_alternative_basis,
                "g3 on (1, i, jj', kappa)",
            )
        }),
        ("group", "level_two_quotient_order_504", |_| {
            let r = quotient_report(&IdealK::from_int(2)?, 10_000)?;
            ok(
                r.order == 504 && r.closure == Some(504),
                format!("|G| = {}, closure {:?}", r.order, r.closure),
            )
        }),
        ("group", "klein_quartic_genus_3", |_| {
            let g = genus_of(&ideal(2, -1, 0))?;
            ok(g == 3, format!("genus {g}"))
        }),
        ("group", "level_two_genus_7", |_| {
            let g = genus_of(&IdealK::from_int(2)?)?;
            ok(g == 7, format!("genus {g}"))
        }),
        ("group", "triplet_genus_14", |_| {
            let g = triplet()
                .iter()
                .map(genus_of)
                .collect::<Result<Vec<u64>>>()?;
            ok(g == [14, 14, 14], format!("genera {g:?}"))
        }),
        ("group", "klein_quartic_systole_bound", |c| {
            let r = systole_lattice_auto(&ideal(2, -1, 0), None, c.opts.precision, c.exec)?;
            ok(
                r.bound_holds,
                format!(
                    "sys = {:.6} >= {:.6}",
                    r.length.to_f64(),
                    r.lower_bound.to_f64()
                ),
            )
        }),
        ("group", "triplet_systoles_differ", |c| {
            let mut pairs = BTreeSet::new();
            let mut agree = true;
            for i in triplet() {
                let lat = systole_lattice_auto(&i, None, c.opts.precision, c.exec)?;
                let bfs = systole_bfs(&i, c.opts.max_word_length, c.opts.precision, c.exec)?;
                agree &= lat.min_trace == bfs.min_trace;
                pairs.insert((lat.min_trace.to_string(), lat.multiplicity));
            }
            let text: Vec<String> = pairs.iter().map(|(t, m)| format!("({t}, {m})")).collect();
            ok(
                agree && pairs.len() >= 2,
                format!("{} distinct: {}", pairs.len(), text.join(" ")),
            )
        }),
        ("cli", "parse_j_prime", |_| {
            let q = parse_quat("(1 + eta*i + tau*j)/2")
                .map_err(|e| hurwitz_core::Error::Consistency(e.to_string()))?;
            ok(q == QuatElem::j_prime(), q.to_string())
        }),
        ("cli", "parse_minimal_polynomial", |_| {
            let v = parse_element("eta^3 + eta^2 - 2*eta - 1")
                .map_err(|e| hurwitz_core::Error::Consistency(e.to_string()))?;
            ok(
                v == Parsed::Field(FieldElem::zero()),
                "eta^3 + eta^2 - 2eta - 1 = 0",
            )
        }),
        ("field", "power_sums_recurrence", |c| {
            let t = trace_powers(c.opts.eta_rule, 5);
            ok(t == [3, -1, 5, -4, 13], format!("{t:?}"))
        }),
    ]
}

/// Number of checks in the unfiltered suite.
pub fn check_count() -> usize {
    checks::<hurwitz_core::exec::Sequential>().len()
}

fn selected(filter: &Option<String>, group: &str, name: &str) -> bool {
    match filter {
        None => true,
        Some(f) => group == f || name.contains(f.as_str()),
    }
}

pub fn run_suite<E: Executor>(opts: &SuiteOptions, exec: &E) -> Certificate {
    let ctx = Ctx { opts, exec };
    let mut cert = Certificate::new("suite");
    cert.input("filter", opts.filter.clone().unwrap_or_default());
    cert.input("eta_rule", format!("{:?}", opts.eta_rule));
    cert.input("precision_digits", opts.precision.digits);
    cert.input("max_word_length", opts.max_word_length);
    for (group, name, f) in checks::<E>() {
        if !selected(&opts.filter, group, name) {
            continue;
        }
        let check = match f(&ctx) {
            Ok((passed, witness)) => Check::new(group, name, passed, witness),
            Err(e) => Check::new(group, name, false, format!("error: {e}")),
        };
        cert.check(check);
    }
    let groups: BTreeSet<String> = cert.checks.iter().map(|c| c.group.clone()).collect();
    let count = cert.checks.len();
    cert.output("check_count", count);
    cert.output("groups", groups.into_iter().collect::<Vec<_>>());
    cert
}
