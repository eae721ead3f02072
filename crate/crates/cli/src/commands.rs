//! Subcommand implementations. Each returns a certificate.

use std::collections::BTreeSet;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hurwitz_core::exec::Executor;
use hurwitz_core::field::{discriminant_for_rule, trace_gram, ETA_CUBE};
use hurwitz_core::group::congruence::{
    congruent_pm_one, congruent_pm_one_via_split, in_congruence_subgroup,
};
use hurwitz_core::group::quotient::quotient_report;
use hurwitz_core::group::systole::{
    systole_bfs, systole_lattice, systole_lattice_auto, SearchBound, SystoleReport,
    DEFAULT_MAX_WORD_LENGTH,
};
use hurwitz_core::ideal::{factor_ideal, factor_rational_prime};
use hurwitz_core::order::{
    describe_membership, maximality_certificate, order_index, reduced_discriminant,
};
use hurwitz_core::quat::{norm_form_at, NormForm};
use hurwitz_core::residue::{
    build_residue_ring, o_mod_2_structure, reduce, split, verify_azumaya_up_to,
};
use hurwitz_core::{FieldElem, IdealK, OrderName, Place, Precision};
use serde_json::{json, Value};

use crate::cert::{
    field_json, field_matrix_json, ideal_json, mat_json, quat_json, real_json, Certificate, Check,
};
use crate::parse::{parse_field, parse_ideal, parse_quat, ParseError};
use crate::suite::{run_suite, SuiteOptions};

#[derive(Debug, Parser)]
#[command(
    name = "hurwitz",
    version,
    about = "Exact computations in the Hurwitz quaternion order"
)]
pub struct Cli {
    /// Print the certificate as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Decimal digits for real embeddings and lengths.
    #[arg(long, global = true, default_value_t = 64)]
    pub precision: u32,
    /// Worker threads for enumerations; results do not depend on it.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Arithmetic in K = Q(eta).
    #[command(subcommand)]
    Field(FieldCmd),
    /// Arithmetic in the quaternion algebra (eta, eta).
    #[command(subcommand)]
    Quat(QuatCmd),
    /// The orders O, Q_Elk and Q_Hur.
    #[command(subcommand)]
    Order(OrderCmd),
    /// Residue rings and splittings of Q_Hur modulo ideals.
    #[command(subcommand)]
    Residue(ResidueCmd),
    /// Congruence quotients and systoles.
    #[command(subcommand)]
    Surface(SurfaceCmd),
    /// Run the named check suite.
    Suite(SuiteArgs),
}

#[derive(Debug, Subcommand)]
pub enum FieldCmd {
    /// Trace, norm, inverse and real embeddings of an element.
    Eval {
        #[arg(long)]
        elem: String,
    },
    /// Prime ideals above a rational prime, or the factorization of an ideal.
    Factor {
        #[arg(long, conflicts_with = "ideal")]
        prime: Option<u64>,
        #[arg(long)]
        ideal: Option<String>,
    },
    /// Trace form and discriminant from a reduction rule eta^3 = r0 + r1 eta + r2 eta^2.
    Discriminant {
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        rule: Option<Vec<i64>>,
    },
}

#[derive(Debug, Subcommand)]
pub enum QuatCmd {
    /// Reduced trace and norm, conjugate and the real matrix at the natural place.
    Eval {
        #[arg(long)]
        elem: String,
    },
    /// Signature of the norm form at the three real places.
    Ramification,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum OrderArg {
    #[value(name = "O")]
    Standard,
    #[value(name = "ELK")]
    Elkies,
    #[value(name = "HUR")]
    Hurwitz,
}

impl OrderArg {
    fn name(self) -> OrderName {
        match self {
            OrderArg::Standard => OrderName::Standard,
            OrderArg::Elkies => OrderName::Elkies,
            OrderArg::Hurwitz => OrderName::Hurwitz,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum OrderCmd {
    /// Coordinates of an element on the basis of an order.
    Contains {
        #[arg(long, value_enum)]
        order: OrderArg,
        #[arg(long)]
        elem: String,
    },
    /// Unit discriminant of Q_Hur with the inverse of its Gram determinant.
    Maximality,
    /// Reduced discriminant of an order.
    Discriminant {
        #[arg(long, value_enum)]
        order: OrderArg,
    },
    /// Index of one order in another.
    Index {
        #[arg(long, value_enum)]
        larger: OrderArg,
        #[arg(long, value_enum)]
        smaller: OrderArg,
    },
}

#[derive(Debug, Subcommand)]
pub enum ResidueCmd {
    /// Structure of Z[eta]/I.
    Ring {
        #[arg(long)]
        ideal: String,
    },
    /// Images of the generators of Q_Hur in M_2(Z[eta]/I).
    Split {
        #[arg(long)]
        ideal: String,
    },
    /// Image of an element of Q_Hur in M_2(Z[eta]/I).
    Reduce {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        elem: String,
    },
    /// Checks Q_Hur/P = M_2(Z[eta]/P) for every prime P above p <= max-prime.
    VerifyAzumaya {
        #[arg(long, default_value_t = 50)]
        max_prime: u64,
    },
    /// Structure of O/2O.
    Dyadic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Bfs,
    Lattice,
    Both,
}

#[derive(Debug, Subcommand)]
pub enum SurfaceCmd {
    /// Quotient group order and genus for a level.
    Quotient {
        #[arg(long)]
        ideal: String,
        /// Largest group for which the closure is enumerated.
        #[arg(long, default_value_t = 100_000)]
        closure_limit: usize,
    },
    /// Systole of the congruence surface of a level.
    Analyze {
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value_t = DEFAULT_MAX_WORD_LENGTH)]
        max_len: u32,
        #[arg(long, value_enum, default_value_t = EngineArg::Both)]
        engine: EngineArg,
        /// Trace bound for the lattice engine; grows automatically when omitted.
        #[arg(long)]
        trace_bound: Option<f64>,
    },
    /// Systoles of the three genus-14 levels above 13.
    Triplet {
        #[arg(long, default_value_t = DEFAULT_MAX_WORD_LENGTH)]
        max_len: u32,
    },
    /// Membership of a norm-one element in the congruence subgroup of a level.
    Congruence {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        elem: String,
    },
}

#[derive(Debug, Args)]
pub struct SuiteArgs {
    /// Run only checks in this group or whose name contains this text.
    #[arg(long)]
    pub filter: Option<String>,
    /// Replace the reduction rule for eta^3 (mutation testing).
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub eta_rule: Option<Vec<i64>>,
    #[arg(long, default_value_t = DEFAULT_MAX_WORD_LENGTH)]
    pub max_len: u32,
}

#[derive(Debug, thiserror::Error)]
pub enum CommandError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] hurwitz_core::Error),
}

impl CommandError {
    /// Process exit code: 2 for bad input, 1 for failed computations.
    pub fn exit_code(&self) -> i32 {
        match self {
            CommandError::Parse(_) | CommandError::Usage(_) => 2,
            CommandError::Core(_) => 1,
        }
    }
}

pub type CmdResult = Result<Certificate, CommandError>;

pub struct Context<'a, E: Executor> {
    pub precision: Precision,
    pub exec: &'a E,
}

fn rule3(v: &Option<Vec<i64>>) -> Result<[i64; 3], CommandError> {
    match v {
        None => Ok(ETA_CUBE),
        Some(r) if r.len() == 3 => Ok([r[0], r[1], r[2]]),
        Some(r) => Err(CommandError::Usage(format!(
            "a reduction rule has 3 coefficients, got {}",
            r.len()
        ))),
    }
}

pub fn run<E: Executor>(cmd: &Command, ctx: &Context<'_, E>) -> CmdResult {
    match cmd {
        Command::Field(c) => field(c, ctx),
        Command::Quat(c) => quat(c, ctx),
        Command::Order(c) => order(c),
        Command::Residue(c) => residue(c, ctx),
        Command::Surface(c) => surface(c, ctx),
        Command::Suite(a) => {
            let opts = SuiteOptions {
                filter: a.filter.clone(),
                eta_rule: rule3(&a.eta_rule)?,
                precision: ctx.precision,
                max_word_length: a.max_len,
            };
            Ok(run_suite(&opts, ctx.exec))
        }
    }
}

fn embeddings(x: &FieldElem, precision: Precision) -> Value {
    let mut m = serde_json::Map::new();
    for p in Place::ALL {
        m.insert(
            p.name().to_string(),
            real_json(&x.embed(p, precision), precision.digits),
        );
    }
    Value::Object(m)
}

fn field<E: Executor>(c: &FieldCmd, ctx: &Context<'_, E>) -> CmdResult {
    match c {
        FieldCmd::Eval { elem } => {
            let x = parse_field(elem)?;
            let mut cert = Certificate::new("field eval");
            cert.input("elem", elem.as_str());
            cert.output("value", field_json(&x))
                .output("trace", x.trace().to_string())
                .output("norm", x.norm().to_string())
                .output("integral", x.is_integral())
                .output("unit", x.is_unit())
                .output("embeddings", embeddings(&x, ctx.precision));
            if let Ok(inv) = x.inverse() {
                cert.output("inverse", field_json(&inv));
                cert.check(Check::new(
                    "field",
                    "inverse_times_value_is_one",
                    (&inv * &x).is_one(),
                    inv.to_string(),
                ));
            }
            Ok(cert)
        }
        FieldCmd::Factor { prime, ideal } => {
            let mut cert = Certificate::new("field factor");
            let primes = match (prime, ideal) {
                (Some(p), _) => {
                    cert.input("prime", *p);
                    let f = factor_rational_prime(*p)?;
                    cert.check(Check::new(
                        "field",
                        "degree_sum_is_3",
                        f.degree() == 3,
                        format!("sum e f = {}", f.degree()),
                    ));
                    f.factors.into_iter().map(|p| (p, 1)).collect::<Vec<_>>()
                }
                (None, Some(text)) => {
                    let i = parse_ideal(text)?;
                    cert.input("ideal", i.to_string());
                    factor_ideal(&i)?
                }
                (None, None) => return Err(CommandError::Usage("give --prime or --ideal".into())),
            };
            let rows: Vec<Value> = primes
                .iter()
                .map(|(p, k)| {
                    json!({ "ideal": ideal_json(&p.ideal), "p": p.p, "e": p.e, "f": p.f, "root": p.root, "exponent": k })
                })
                .collect();
            cert.output("primes", rows);
            Ok(cert)
        }
        FieldCmd::Discriminant { rule } => {
            let r = rule3(rule)?;
            let d = discriminant_for_rule(r);
            let mut cert = Certificate::new("field discriminant");
            cert.input("rule", format!("{r:?}"));
            cert.output("trace_gram", json!(trace_gram(r)))
                .output("discriminant", d);
            cert.check(Check::new(
                "field",
                "discriminant_is_49",
                d == 49,
                format!("{d}"),
            ));
            Ok(cert)
        }
    }
}

fn quat<E: Executor>(c: &QuatCmd, ctx: &Context<'_, E>) -> CmdResult {
    match c {
        QuatCmd::Eval { elem } => {
            let q = parse_quat(elem)?;
            let m = q.real_matrix(ctx.precision);
            let digits = ctx.precision.digits;
            let mut cert = Certificate::new("quat eval");
            cert.input("elem", elem.as_str());
            cert.output("value", quat_json(&q))
                .output("reduced_trace", field_json(&q.reduced_trace()))
                .output("reduced_norm", field_json(&q.reduced_norm()))
                .output("conjugate", quat_json(&q.conj()))
                .output(
                    "matrix_sigma0",
                    m.0.iter().map(|x| real_json(x, digits)).collect::<Vec<_>>(),
                );
            let det_ok = (&m.det() - &q.reduced_norm().embed(Place::Natural, ctx.precision))
                .abs()
                .to_f64()
                < 1e-30;
            cert.check(Check::new(
                "quaternion",
                "matrix_determinant_is_norm",
                det_ok,
                "det M = nrd at sigma0",
            ));
            Ok(cert)
        }
        QuatCmd::Ramification => {
            let mut cert = Certificate::new("quat ramification");
            for p in Place::ALL {
                let form = match norm_form_at(p) {
                    NormForm::Definite => "definite (Hamilton quaternions)",
                    NormForm::Indefinite => "indefinite (M_2(R))",
                };
                cert.output(p.name(), form);
            }
            let ok = norm_form_at(Place::Natural) == NormForm::Indefinite
                && norm_form_at(Place::Sigma1) == NormForm::Definite
                && norm_form_at(Place::Sigma2) == NormForm::Definite;
            cert.check(Check::new(
                "quaternion",
                "ramified_exactly_at_sigma1_sigma2",
                ok,
                "signatures",
            ));
            Ok(cert)
        }
    }
}

fn order(c: &OrderCmd) -> CmdResult {
    match c {
        OrderCmd::Contains { order, elem } => {
            let q = parse_quat(elem)?;
            let o = order.name().build();
            let m = o.contains(&q);
            let mut cert = Certificate::new("order contains");
            cert.input("order", o.name().label())
                .input("elem", elem.as_str());
            cert.output(
                "coords",
                m.coords.iter().map(field_json).collect::<Vec<_>>(),
            )
            .output("member", m.member)
            .output("summary", describe_membership(&m));
            Ok(cert)
        }
        OrderCmd::Maximality => {
            let m = maximality_certificate()?;
            let d = &m.discriminant;
            let mut cert = Certificate::new("order maximality");
            cert.output("gram", field_matrix_json(&d.gram))
                .output("determinant", field_json(&d.determinant))
                .output("determinant_inverse", field_json(&m.determinant_inverse))
                .output("reduced_discriminant", ideal_json(&d.reduced))
                .output("index_over_standard", m.index_over_standard.to_string());
            let product = &m.determinant_inverse * &d.determinant;
            cert.check(Check::new(
                "orders",
                "determinant_inverse_is_integral",
                m.determinant_inverse.is_integral(),
                m.determinant_inverse.to_string(),
            ));
            cert.check(Check::new(
                "orders",
                "determinant_times_inverse_is_one",
                product.is_one(),
                product.to_string(),
            ));
            cert.check(Check::new(
                "orders",
                "hurwitz_is_maximal",
                m.maximal,
                d.reduced.to_string(),
            ));
            Ok(cert)
        }
        OrderCmd::Discriminant { order } => {
            let d = reduced_discriminant(&order.name().build())?;
            let mut cert = Certificate::new("order discriminant");
            cert.input("order", order.name().label());
            cert.output("gram", field_matrix_json(&d.gram))
                .output("determinant", field_json(&d.determinant))
                .output("reduced_discriminant", ideal_json(&d.reduced))
                .output("unit", field_json(&d.unit));
            Ok(cert)
        }
        OrderCmd::Index { larger, smaller } => {
            let (a, b) = (larger.name().build(), smaller.name().build());
            let mut cert = Certificate::new("order index");
            cert.input("larger", a.name().label())
                .input("smaller", b.name().label());
            cert.output("index", order_index(a.lattice(), b.lattice())?.to_string());
            Ok(cert)
        }
    }
}

fn residue<E: Executor>(c: &ResidueCmd, ctx: &Context<'_, E>) -> CmdResult {
    match c {
        ResidueCmd::Ring { ideal } => {
            let i = parse_ideal(ideal)?;
            let r = build_residue_ring(&i)?;
            let mut cert = Certificate::new("residue ring");
            cert.input("ideal", i.to_string());
            let comps: Vec<Value> = r
                .components()
                .iter()
                .map(|c| {
                    json!({
                        "modulus": ideal_json(c.modulus()),
                        "kind": c.kind().name(),
                        "size": c.size(),
                        "residue_field_size": c.residue_size(),
                        "eta": c.display(&c.eta()),
                        "units": c.unit_count(),
                    })
                })
                .collect();
            cert.output("size", r.size())
                .output("kind", r.kind().name())
                .output("components", comps);
            Ok(cert)
        }
        ResidueCmd::Split { ideal } => {
            let i = parse_ideal(ideal)?;
            let s = split(&i)?;
            let mut cert = Certificate::new("residue split");
            cert.input("ideal", i.to_string());
            let comps: Vec<Value> = s
                .components()
                .iter()
                .map(|c| {
                    let r = c.ring();
                    let (x, y) = c.generator_images();
                    let basis: Vec<Value> = c.basis_images().iter().map(|m| mat_json(r, m)).collect();
                    let mut v = json!({
                        "modulus": ideal_json(r.modulus()),
                        "presentation": format!("{:?}", c.presentation()),
                        "x": mat_json(r, &x),
                        "y": mat_json(r, &y),
                        "hurwitz_basis_images": basis,
                        "g2": mat_json(r, &c.image_g2()),
                        "g3": mat_json(r, &c.image_g3()),
                    });
                    if let Some(sol) = c.norm_solution() {
                        v["norm_solution"] = json!({ "a": r.display(&sol.a), "b": r.display(&sol.b), "lift_steps": sol.lift_steps });
                    }
                    v
                })
                .collect();
            cert.output("components", comps);
            cert.check(Check::new(
                "residue",
                "relations_hold",
                s.relations_hold(),
                "images satisfy the defining relations",
            ));
            cert.check(Check::new(
                "residue",
                "surjective",
                s.surjective(),
                format!("|R| = {}", s.size()),
            ));
            Ok(cert)
        }
        ResidueCmd::Reduce { ideal, elem } => {
            let i = parse_ideal(ideal)?;
            let q = parse_quat(elem)?;
            let s = split(&i)?;
            let images = reduce(&q, &s)?;
            let mut cert = Certificate::new("residue reduce");
            cert.input("ideal", i.to_string())
                .input("elem", elem.as_str());
            let v: Vec<Value> = images
                .iter()
                .zip(s.components())
                .map(|(m, c)| mat_json(c.ring(), m))
                .collect();
            cert.output("images", v);
            Ok(cert)
        }
        ResidueCmd::VerifyAzumaya { max_prime } => {
            let reports = verify_azumaya_up_to(*max_prime, ctx.exec)?;
            let mut cert = Certificate::new("residue verify-azumaya");
            cert.input("max_prime", *max_prime);
            let rows: Vec<Value> = reports
                .iter()
                .map(|f| json!({ "prime": ideal_json(&f.prime.ideal), "p": f.prime.p, "residue_size": f.residue_size, "full_matrix_ring": f.full_matrix_ring }))
                .collect();
            cert.output("fibers", rows);
            let all = reports.iter().all(|f| f.full_matrix_ring);
            cert.check(Check::new(
                "residue",
                "every_fiber_is_a_matrix_ring",
                all,
                format!("{} primes", reports.len()),
            ));
            Ok(cert)
        }
        ResidueCmd::Dyadic => {
            let d = o_mod_2_structure()?;
            let mut cert = Certificate::new("residue dyadic");
            cert.output("size", d.size)
                .output("nilpotent_count", d.nilpotent_count)
                .output("radical_dims", d.radical_dims.to_vec())
                .output("commutative", d.commutative);
            cert.check(Check::new(
                "residue",
                "radical_dims",
                d.radical_dims == [3, 1, 0],
                format!("{:?}", d.radical_dims),
            ));
            cert.check(Check::new(
                "residue",
                "presentation_holds",
                d.presentation_holds,
                "",
            ));
            Ok(cert)
        }
    }
}

pub fn systole_json(r: &SystoleReport, digits: u32) -> Value {
    let bound = match r.bound {
        SearchBound::WordLength(n) => json!({ "max_word_length": n }),
        SearchBound::Trace(t) => json!({ "trace_bound": t }),
    };
    json!({
        "engine": r.engine.name(),
        "genus": r.genus,
        "search_bound": bound,
        "min_trace": field_json(&r.min_trace),
        "trace_sigma0": real_json(&r.trace_value, digits),
        "length": real_json(&r.length, digits),
        "lower_bound": real_json(&r.lower_bound, digits),
        "bound_holds": r.bound_holds,
        "multiplicity": r.multiplicity,
        "found_with_min_trace": r.found_with_min_trace,
        "witness": quat_json(&r.witness.to_quat()),
        "witness_word": r.witness_word.as_ref().map(|w| w.to_string()),
        "examined": r.examined,
        "congruence_elements": r.congruent,
    })
}

fn analyze<E: Executor>(
    i: &IdealK,
    engine: EngineArg,
    max_len: u32,
    trace_bound: Option<f64>,
    ctx: &Context<'_, E>,
) -> Result<Vec<SystoleReport>, CommandError> {
    let mut out = Vec::new();
    if engine != EngineArg::Bfs {
        out.push(match trace_bound {
            Some(t) => systole_lattice(i, t, ctx.precision, ctx.exec)?,
            None => systole_lattice_auto(i, None, ctx.precision, ctx.exec)?,
        });
    }
    if engine != EngineArg::Lattice {
        out.push(systole_bfs(i, max_len, ctx.precision, ctx.exec)?);
    }
    Ok(out)
}

fn surface<E: Executor>(c: &SurfaceCmd, ctx: &Context<'_, E>) -> CmdResult {
    let digits = ctx.precision.digits;
    match c {
        SurfaceCmd::Quotient {
            ideal,
            closure_limit,
        } => {
            let i = parse_ideal(ideal)?;
            let r = quotient_report(&i, *closure_limit)?;
            let mut cert = Certificate::new("surface quotient");
            cert.input("ideal", i.to_string())
                .input("closure_limit", *closure_limit);
            cert.output("order", r.order.to_string())
                .output("closure", r.closure)
                .output("generator_orders", json!(r.generator_orders))
                .output("genus", r.genus);
            if let Some(n) = r.closure {
                cert.check(Check::new(
                    "group",
                    "closure_matches_formula",
                    n as u128 == r.order,
                    format!("{n}"),
                ));
            }
            Ok(cert)
        }
        SurfaceCmd::Analyze {
            ideal,
            max_len,
            engine,
            trace_bound,
        } => {
            let i = parse_ideal(ideal)?;
            let reports = analyze(&i, *engine, *max_len, *trace_bound, ctx)?;
            let mut cert = Certificate::new("surface analyze");
            cert.input("ideal", i.to_string())
                .input("engine", format!("{engine:?}").to_lowercase())
                .input("max_len", *max_len)
                .input(
                    "trace_bound",
                    trace_bound
                        .map(|t| t.to_string())
                        .unwrap_or_else(|| "auto".into()),
                )
                .input("precision_digits", digits);
            cert.output("ideal", ideal_json(&i)).output(
                "reports",
                reports
                    .iter()
                    .map(|r| systole_json(r, digits))
                    .collect::<Vec<_>>(),
            );
            for r in &reports {
                let name = format!("systole_bound_{}", r.engine.name());
                let w = format!(
                    "{} >= {}",
                    r.length.to_decimal(12),
                    r.lower_bound.to_decimal(12)
                );
                cert.check(Check::new("group", &name, r.bound_holds, w));
            }
            if reports.len() == 2 {
                let agree = reports[0].min_trace == reports[1].min_trace;
                cert.check(Check::new(
                    "group",
                    "engines_agree_on_min_trace",
                    agree,
                    reports[0].min_trace.to_string(),
                ));
            }
            Ok(cert)
        }
        SurfaceCmd::Triplet { max_len } => {
            let levels =
                [(-1, 2), (3, -2), (3, 1)].map(|(a, b)| IdealK::new(FieldElem::from_ints(a, b, 0)));
            let mut cert = Certificate::new("surface triplet");
            cert.input("max_len", *max_len)
                .input("precision_digits", digits);
            let mut rows = Vec::new();
            let mut pairs = BTreeSet::new();
            for i in levels {
                let i = i?;
                let reports = analyze(&i, EngineArg::Both, *max_len, None, ctx)?;
                let lat = &reports[0];
                pairs.insert((lat.min_trace.to_string(), lat.multiplicity));
                rows.push(json!({
                    "ideal": ideal_json(&i),
                    "genus": lat.genus,
                    "min_trace": field_json(&lat.min_trace),
                    "length": real_json(&lat.length, digits),
                    "multiplicity": lat.multiplicity,
                    "engines_agree": lat.min_trace == reports[1].min_trace,
                }));
                let w = format!("{}: {}", i, lat.length.to_decimal(12));
                cert.check(Check::new(
                    "group",
                    &format!("systole_bound_{}", i),
                    lat.bound_holds,
                    w,
                ));
                cert.check(Check::new(
                    "group",
                    &format!("engines_agree_{}", i),
                    lat.min_trace == reports[1].min_trace,
                    lat.min_trace.to_string(),
                ));
            }
            cert.output("levels", rows);
            cert.check(Check::new(
                "group",
                "distinct_trace_multiplicity_pairs",
                pairs.len() >= 2,
                format!("{}", pairs.len()),
            ));
            Ok(cert)
        }
        SurfaceCmd::Congruence { ideal, elem } => {
            let i = parse_ideal(ideal)?;
            let q = parse_quat(elem)?;
            let s = split(&i)?;
            let mut cert = Certificate::new("surface congruence");
            cert.input("ideal", i.to_string())
                .input("elem", elem.as_str());
            let lattice_pm = congruent_pm_one(&q, &i)?;
            let split_pm = congruent_pm_one_via_split(&q, &s)?;
            cert.output("in_gamma", in_congruence_subgroup(&q, &i)?)
                .output("in_gamma_up_to_sign", lattice_pm);
            cert.check(Check::new(
                "group",
                "lattice_and_split_tests_agree",
                lattice_pm == split_pm,
                format!("{lattice_pm}"),
            ));
            Ok(cert)
        }
    }
}
