//! Explicit isomorphisms Q_Hur / I Q_Hur -> M2(Z[eta]/I).
//!
//! Odd prime powers go through the standard order O, which agrees with the
//! Hurwitz order away from 2: i maps to [[0,1],[eta,0]] and j to
//! [[a,b],[-eta b,-a]] for a solution of a^2 - eta b^2 = eta. Powers of 2 go
//! through the Elkies order, whose index in Q_Hur is odd, with i and j'
//! mapped to the matrices x', y' built from a 2-adic root of b = 2 + b^2.
//! Composite moduli are handled componentwise.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::mat::{det4, Mat2};
use super::ring::{build_residue_ring, Residue, ResidueRing};
use crate::error::{Error, Result};
use crate::exec::Executor;
use crate::field::FieldElem;
use crate::group::generators::{g2, g3};
use crate::ideal::{primes_up_to, IdealK, PrimeIdeal};
use crate::order::{hur_congruence_test, Lattice, Order};
use crate::quat::QuatElem;

/// Exhaustive subring enumeration is attempted when |M2(R)| is at most this.
pub const EXHAUSTIVE_LIMIT: u64 = 1_000_000;

/// A solution of a^2 - eta b^2 = eta in an odd residue ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NormSolution {
    pub a: Residue,
    pub b: Residue,
    /// The solution found in the residue field before lifting.
    pub base: (Residue, Residue),
    /// Newton steps used to lift to the full ring.
    pub lift_steps: u32,
}

fn norm_defect(r: &ResidueRing, a: &Residue, b: &Residue) -> Residue {
    let eta = r.eta();
    let eb2 = r.mul(&eta, &r.mul(b, b));
    r.sub(&r.sub(&r.mul(a, a), &eb2), &eta)
}

/// Solves a^2 - eta b^2 = eta: the (b, a)-smallest solution over the residue
/// field, then Newton lifting in whichever variable has a unit derivative.
pub fn solve_norm_equation(r: &ResidueRing) -> Result<NormSolution> {
    if r.is_even() {
        return Err(Error::NoSolution(format!("2 is not invertible in {r}")));
    }
    let eta = r.eta();
    let mut roots: BTreeMap<Residue, Residue> = BTreeMap::new();
    for a in r.residue_reps() {
        roots.entry(r.residue_class(&r.mul(&a, &a))).or_insert(a);
    }
    let mut base = None;
    for b in r.residue_reps() {
        let target = r.mul(&eta, &r.add(&r.one(), &r.mul(&b, &b)));
        if let Some(&a) = roots.get(&r.residue_class(&target)) {
            base = Some((a, b));
            break;
        }
    }
    let (mut a, mut b) =
        base.ok_or_else(|| Error::NoSolution(format!("no solution modulo the prime of {r}")))?;
    let two = r.from_int(2);
    let mut lift_steps = 0;
    for _ in 0..2 * r.exponent() + 2 {
        let f = norm_defect(r, &a, &b);
        if r.is_zero(&f) {
            break;
        }
        if r.is_unit(&a) {
            a = r.sub(&a, &r.mul(&f, &r.inv(&r.mul(&two, &a))?));
        } else {
            b = r.add(&b, &r.mul(&f, &r.inv(&r.mul(&two, &r.mul(&eta, &b)))?));
        }
        lift_steps += 1;
    }
    if !r.is_zero(&norm_defect(r, &a, &b)) {
        return Err(Error::Consistency(format!(
            "Newton lifting did not converge in {r}"
        )));
    }
    Ok(NormSolution {
        a,
        b,
        base: base.expect("found above"),
        lift_steps,
    })
}

/// The 2-adic root of b = 2 + b^2 in the orbit of 2, modulo 2^t, with the other root.
pub fn dyadic_root(t: u32) -> (i64, i64) {
    let m: i128 = 1 << t;
    let mut b: i128 = 2 % m;
    for _ in 1..t {
        b = (2 + b * b).rem_euclid(m);
    }
    (b as i64, (1 - b).rem_euclid(m) as i64)
}

/// Which order supplies the generators on this component.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Presentation {
    /// O = Z[eta][i, j]; images of i and j.
    Standard,
    /// The Elkies order Z[eta][i, j']; images of x = i and y = j'.
    Elkies,
}

/// The splitting on one prime-power component.
#[derive(Debug, Clone)]
pub struct LocalSplit {
    ring: ResidueRing,
    presentation: Presentation,
    x: Mat2,
    y: Mat2,
    /// Images of the source order basis (1, x, y, xy).
    basis_images: [Mat2; 4],
    norm_solution: Option<NormSolution>,
    /// The root b and the other root 1 - b, for even components.
    dyadic: Option<(i64, i64)>,
    elkies: Option<Lattice>,
    /// Images of 1, g2 and g3.
    derived: [Mat2; 3],
}

impl LocalSplit {
    fn odd(ring: ResidueRing) -> Result<LocalSplit> {
        let sol = solve_norm_equation(&ring)?;
        let r = &ring;
        let eta = r.eta();
        let x = Mat2([r.zero(), r.one(), eta, r.zero()]);
        let y = Mat2([sol.a, sol.b, r.neg(&r.mul(&eta, &sol.b)), r.neg(&sol.a)]);
        Self::finish(ring, Presentation::Standard, x, y, Some(sol), None, None)
    }

    fn even(ring: ResidueRing) -> Result<LocalSplit> {
        let (b, other) = dyadic_root(ring.exponent());
        let r = &ring;
        let eta = r.eta();
        let eta2 = r.mul(&eta, &eta);
        let bb = r.from_int(b);
        let x = Mat2([r.zero(), r.one(), eta, r.zero()]);
        let y = Mat2([
            eta2,
            r.mul(&eta, &bb),
            r.mul(&eta2, &r.sub(&r.one(), &bb)),
            r.sub(&r.one(), &eta2),
        ]);
        let elkies = Order::elkies().lattice().clone();
        Self::finish(
            ring,
            Presentation::Elkies,
            x,
            y,
            None,
            Some((b, other)),
            Some(elkies),
        )
    }

    fn finish(
        ring: ResidueRing,
        presentation: Presentation,
        x: Mat2,
        y: Mat2,
        norm_solution: Option<NormSolution>,
        dyadic: Option<(i64, i64)>,
        elkies: Option<Lattice>,
    ) -> Result<LocalSplit> {
        let basis_images = [Mat2::identity(&ring), x, y, x.mul(&ring, &y)];
        let mut split = LocalSplit {
            ring,
            presentation,
            x,
            y,
            basis_images,
            norm_solution,
            dyadic,
            elkies,
            derived: [Mat2::zero(); 3],
        };
        if !split.relations_hold() {
            return Err(Error::Consistency(format!(
                "generator images fail the presentation in {}",
                split.ring
            )));
        }
        split.derived = [
            split.reduce(&QuatElem::one())?,
            split.reduce(&g2())?,
            split.reduce(&g3())?,
        ];
        Ok(split)
    }

    pub fn ring(&self) -> &ResidueRing {
        &self.ring
    }

    pub fn presentation(&self) -> Presentation {
        self.presentation
    }

    /// Images of the two algebra generators of the source order.
    pub fn generator_images(&self) -> (Mat2, Mat2) {
        (self.x, self.y)
    }

    pub fn basis_images(&self) -> &[Mat2; 4] {
        &self.basis_images
    }

    pub fn norm_solution(&self) -> Option<&NormSolution> {
        self.norm_solution.as_ref()
    }

    pub fn dyadic_roots(&self) -> Option<(i64, i64)> {
        self.dyadic
    }

    pub fn image_one(&self) -> Mat2 {
        self.derived[0]
    }

    pub fn image_g2(&self) -> Mat2 {
        self.derived[1]
    }

    pub fn image_g3(&self) -> Mat2 {
        self.derived[2]
    }

    /// The defining relations of the source order hold for the images.
    pub fn relations_hold(&self) -> bool {
        let r = &self.ring;
        let eta = Mat2::scalar(r, &r.eta());
        let (x, y) = (&self.x, &self.y);
        let xy = x.mul(r, y);
        let yx = y.mul(r, x);
        match self.presentation {
            Presentation::Standard => x.mul(r, x) == eta && y.mul(r, y) == eta && yx == xy.neg(r),
            Presentation::Elkies => {
                let e = r.eta();
                let c = Mat2::scalar(r, &r.add(&r.one(), &r.mul_int(&e, 3)));
                let e2 = Mat2::scalar(r, &r.mul(&e, &e));
                x.mul(r, x) == eta && y.mul(r, y) == c.add(r, y) && yx == e2.add(r, x).sub(r, &xy)
            }
        }
    }

    /// Coordinates of `x` on the source order basis, reduced into the ring.
    fn source_coords(&self, x: &QuatElem) -> Result<[Residue; 4]> {
        let coords: [FieldElem; 4] = match &self.elkies {
            Some(lattice) => lattice.coords(x),
            None => x.clone().into_coords(),
        };
        let mut out = [Residue::default(); 4];
        for k in 0..4 {
            out[k] = self.ring.from_field(&coords[k])?;
        }
        Ok(out)
    }

    fn combine(&self, coords: &[Residue; 4]) -> Mat2 {
        let r = &self.ring;
        coords
            .iter()
            .zip(&self.basis_images)
            .fold(Mat2::zero(), |acc, (c, m)| acc.add(r, &m.scale(r, c)))
    }

    /// Image of an element of the Hurwitz order. Membership is the caller's responsibility.
    fn reduce(&self, x: &QuatElem) -> Result<Mat2> {
        Ok(self.combine(&self.source_coords(x)?))
    }

    /// The images of the source basis form an R-basis of M2(R).
    pub fn surjective_by_determinant(&self) -> bool {
        let m: [[Residue; 4]; 4] = core::array::from_fn(|k| self.basis_images[k].0);
        self.ring.is_unit(&det4(&self.ring, &m))
    }

    /// Size of the subring generated by 1, x, y, by enumeration; `None` above the limit.
    pub fn generated_subring_size(&self) -> Option<u64> {
        let full = self.ring.size().checked_pow(4)?;
        if full > EXHAUSTIVE_LIMIT {
            return None;
        }
        let r = &self.ring;
        let mut span: BTreeSet<Mat2> = BTreeSet::new();
        span.insert(Mat2::zero());
        let mut queue = alloc::collections::VecDeque::from([Mat2::identity(r)]);
        while let Some(v) = queue.pop_front() {
            if span.contains(&v) {
                continue;
            }
            let base: Vec<Mat2> = span.iter().copied().collect();
            let mut multiple = v;
            while !span.contains(&multiple) {
                for s in &base {
                    span.insert(s.add(r, &multiple));
                }
                multiple = multiple.add(r, &v);
            }
            queue.push_back(v.mul(r, &self.x));
            queue.push_back(v.mul(r, &self.y));
        }
        Some(span.len() as u64)
    }

    /// Full check of the fiber: relations, unit determinant and, at desk
    /// scale, an exhaustive subring count.
    pub fn is_full_matrix_ring(&self) -> bool {
        self.relations_hold()
            && self.surjective_by_determinant()
            && self
                .generated_subring_size()
                .is_none_or(|n| Some(n) == self.ring.size().checked_pow(4))
    }
}

#[derive(Debug, Clone)]
pub struct SplitMap {
    modulus: IdealK,
    components: Vec<LocalSplit>,
}

impl SplitMap {
    pub fn modulus(&self) -> &IdealK {
        &self.modulus
    }

    pub fn components(&self) -> &[LocalSplit] {
        &self.components
    }

    pub fn size(&self) -> u64 {
        self.components.iter().map(|c| c.ring.size()).product()
    }

    pub fn relations_hold(&self) -> bool {
        self.components.iter().all(LocalSplit::relations_hold)
    }

    pub fn surjective(&self) -> bool {
        self.components
            .iter()
            .all(LocalSplit::surjective_by_determinant)
    }
}

fn split_components(ideal: &IdealK, allow_odd: bool, allow_even: bool) -> Result<SplitMap> {
    let ring = build_residue_ring(ideal)?;
    let mut components = Vec::new();
    for c in ring.components() {
        let local = match (c.is_even(), allow_odd, allow_even) {
            (true, _, true) => LocalSplit::even(c.clone())?,
            (false, true, _) => LocalSplit::odd(c.clone())?,
            _ => {
                return Err(Error::Consistency(format!(
                    "{ideal} has a component of the wrong parity"
                )))
            }
        };
        components.push(local);
    }
    Ok(SplitMap {
        modulus: ideal.clone(),
        components,
    })
}

/// Splitting modulo an odd ideal through the standard order.
pub fn split_odd(ideal: &IdealK) -> Result<SplitMap> {
    split_components(ideal, true, false)
}

/// Splitting modulo 2^t through the Elkies order.
pub fn split_even(t: u32) -> Result<SplitMap> {
    if t == 0 {
        return Err(Error::ProperIdealRequired);
    }
    split_components(&IdealK::from_int(1i64 << t)?, false, true)
}

/// Splitting modulo any nonzero proper ideal, one component per prime power.
pub fn split(ideal: &IdealK) -> Result<SplitMap> {
    split_components(ideal, true, true)
}

/// Image of an element of the Hurwitz order, one matrix per component.
pub fn reduce(x: &QuatElem, s: &SplitMap) -> Result<Vec<Mat2>> {
    if !hur_congruence_test(x) {
        return Err(Error::NotInOrder);
    }
    s.components.iter().map(|c| c.reduce(x)).collect()
}

/// The same map computed from the images of another order's basis, which
/// must lie in the Hurwitz order.
pub fn reduce_via_order(x: &QuatElem, s: &SplitMap, order: &Order) -> Result<Vec<Mat2>> {
    let coords = order.coords(x);
    let images: Vec<Vec<Mat2>> = order
        .basis()
        .iter()
        .map(|b| reduce(b, s))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for (k, c) in s.components.iter().enumerate() {
        let r = &c.ring;
        let mut m = Mat2::zero();
        for (coord, image) in coords.iter().zip(&images) {
            m = m.add(r, &image[k].scale(r, &r.from_field(coord)?));
        }
        out.push(m);
    }
    Ok(out)
}

/// Evidence that g Q_Hur is the kernel of reduction modulo g.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealCorrespondence {
    pub generator: FieldElem,
    /// g times each Hurwitz basis element reduces to zero.
    pub kernel_contains_ideal: bool,
    pub surjective: bool,
    /// [Q_Hur : g Q_Hur] = |N(g)|^4 equals |M2(R)|.
    pub index: BigInt,
    pub image_size: BigInt,
}

impl IdealCorrespondence {
    pub fn holds(&self) -> bool {
        self.kernel_contains_ideal && self.surjective && self.index == self.image_size
    }
}

pub fn ideal_correspondence(g: &FieldElem) -> Result<IdealCorrespondence> {
    let ideal = IdealK::new(g.clone())?;
    let s = split(&ideal)?;
    let hur = Order::hurwitz();
    let mut kernel_contains_ideal = true;
    for b in hur.basis() {
        let images = reduce(&b.scale(g), &s)?;
        kernel_contains_ideal &= images.iter().all(|m| *m == Mat2::zero());
    }
    let scaled = hur.lattice().scaled(g);
    let index = crate::order::order_index(hur.lattice(), &scaled)?;
    let image_size = BigInt::from(s.size()).pow(4);
    Ok(IdealCorrespondence {
        generator: g.clone(),
        kernel_contains_ideal,
        surjective: s.surjective(),
        index,
        image_size,
    })
}

/// Q_Hur / M Q_Hur is the full matrix ring over Z[eta]/M.
pub fn verify_azumaya_fiber(m: &IdealK) -> Result<bool> {
    let ring = build_residue_ring(m)?;
    match ring.components() {
        [c] if c.exponent() == 1 => {}
        _ => return Err(Error::Consistency(format!("{m} is not a maximal ideal"))),
    }
    Ok(split(m)?
        .components
        .iter()
        .all(LocalSplit::is_full_matrix_ring))
}

#[derive(Debug, Clone)]
pub struct FiberReport {
    pub prime: PrimeIdeal,
    pub residue_size: u64,
    pub full_matrix_ring: bool,
}

/// Fiber check over every maximal ideal above rational primes up to
/// `max_prime`, in order of norm.
pub fn verify_azumaya_up_to<E: Executor>(max_prime: u64, exec: &E) -> Result<Vec<FiberReport>> {
    let primes = primes_up_to(max_prime)?;
    exec.map(&primes, |p| {
        let ok = verify_azumaya_fiber(&p.ideal)?;
        let residue_size = build_residue_ring(&p.ideal)?.size();
        Ok(FiberReport {
            prime: p.clone(),
            residue_size,
            full_matrix_ring: ok,
        })
    })
    .into_iter()
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exec::Sequential;

    fn ideal(a: i64, b: i64, c: i64) -> IdealK {
        IdealK::new(FieldElem::from_ints(a, b, c)).unwrap()
    }

    fn ints(r: &ResidueRing, m: &Mat2) -> [i64; 4] {
        m.0.map(|x| {
            assert_eq!(x.0[1..], [0, 0]);
            let _ = r;
            x.0[0]
        })
    }

    #[test]
    fn thirteen_triplet_matrices() {
        let s = split(&IdealK::from_int(13).unwrap()).unwrap();
        let expected_i = [[0, 1, 7, 0], [0, 1, 8, 0], [0, 1, 10, 0]];
        let expected_j = [[1, 1, 6, 12], [4, 1, 5, 9], [6, 0, 0, 7]];
        assert_eq!(s.components().len(), 3);
        for (k, c) in s.components().iter().enumerate() {
            let r = c.ring();
            let images = reduce(&QuatElem::i(), &s).unwrap();
            assert_eq!(ints(r, &images[k]), expected_i[k]);
            let images = reduce(&QuatElem::j(), &s).unwrap();
            assert_eq!(ints(r, &images[k]), expected_j[k]);
        }
    }

    #[test]
    fn norm_equation_choices_mod_13() {
        for (gen, ab) in [
            ((-1, 2, 0), (1, 1)),
            ((3, -2, 0), (4, 1)),
            ((3, 1, 0), (6, 0)),
        ] {
            let ring = build_residue_ring(&ideal(gen.0, gen.1, gen.2))
                .unwrap()
                .components()[0]
                .clone();
            let sol = solve_norm_equation(&ring).unwrap();
            assert_eq!((sol.a.0[0], sol.b.0[0]), ab);
            assert_eq!(sol.lift_steps, 0);
        }
    }

    #[test]
    fn klein_quartic_square_root() {
        let ring = build_residue_ring(&IdealK::from_int(7).unwrap())
            .unwrap()
            .components()[0]
            .clone();
        let sol = solve_norm_equation(&ring).unwrap();
        assert_eq!(ring.epsilon_coords(&sol.a), Some([3, 6, 1]));
        assert!(ring.is_zero(&sol.b));
        let sq = ring.mul(&sol.a, &sol.a);
        assert_eq!(ring.epsilon_coords(&sq), Some([2, 1, 0]));
        assert!(sol.lift_steps > 0);
        let s = split_odd(&IdealK::from_int(7).unwrap()).unwrap();
        let c = &s.components()[0];
        let (x, y) = c.generator_images();
        assert_eq!(x.display(&ring), "[[0, 1], [2 + eps, 0]]");
        assert_eq!(
            y.display(&ring),
            "[[3 + 6*eps + eps^2, 0], [0, 4 + eps + 6*eps^2]]"
        );
        assert!(c.surjective_by_determinant());
        assert_eq!(c.generated_subring_size(), None);
    }

    #[test]
    fn dyadic_roots() {
        assert_eq!(dyadic_root(1), (0, 1));
        assert_eq!(dyadic_root(2), (2, 3));
        assert_eq!(dyadic_root(3), (6, 3));
        for t in 1..40 {
            let (b, other) = dyadic_root(t);
            let m = 1i128 << t;
            let (b, other) = (b as i128, other as i128);
            assert_eq!((b * b - b + 2).rem_euclid(m), 0);
            assert_eq!((other * other - other + 2).rem_euclid(m), 0);
            assert_eq!((b + other).rem_euclid(m), 1 % m);
        }
    }

    #[test]
    fn even_split_is_full_matrix_ring() {
        let s = split_even(1).unwrap();
        let c = &s.components()[0];
        assert_eq!(c.ring().size(), 8);
        assert!(c.relations_hold());
        assert!(c.surjective_by_determinant());
        assert_eq!(c.generated_subring_size(), Some(4096));
        for t in 2..6 {
            let s = split_even(t).unwrap();
            assert!(s.relations_hold() && s.surjective());
        }
    }

    #[test]
    fn derived_images_have_unit_determinant_and_right_orders() {
        for i in [
            IdealK::from_int(2).unwrap(),
            ideal(2, -1, 0),
            ideal(-1, 2, 0),
            IdealK::from_int(26).unwrap(),
        ] {
            let s = split(&i).unwrap();
            for c in s.components() {
                let r = c.ring();
                assert_eq!(c.image_g2().det(r), r.one());
                assert_eq!(c.image_g3().det(r), r.one());
                assert_eq!(c.image_g2().pow(r, 2), Mat2::identity(r).neg(r));
                assert_eq!(c.image_g3().pow(r, 3), Mat2::identity(r).neg(r));
                assert_eq!(c.image_one(), Mat2::identity(r));
            }
        }
    }

    #[test]
    fn unit_ideal_rejected() {
        assert!(matches!(
            split(&IdealK::unit()),
            Err(Error::ProperIdealRequired)
        ));
        assert!(split_odd(&IdealK::from_int(6).unwrap()).is_err());
        assert!(reduce(
            &QuatElem::i().scale(&FieldElem::from_fraction(1, 2)),
            &split_even(1).unwrap()
        )
        .is_err());
    }

    #[test]
    fn ideal_correspondence_spot_checks() {
        for g in [
            FieldElem::from_ints(2, -1, 0),
            FieldElem::from_ints(-1, 2, 0),
            FieldElem::from_int(2),
        ] {
            let c = ideal_correspondence(&g).unwrap();
            assert!(c.holds(), "{c:?}");
        }
    }

    #[test]
    fn azumaya_fibers() {
        assert!(verify_azumaya_fiber(&ideal(2, -1, 0)).unwrap());
        assert!(verify_azumaya_fiber(&IdealK::from_int(2).unwrap()).unwrap());
        assert!(verify_azumaya_fiber(&IdealK::from_int(49).unwrap()).is_err());
        let reports = verify_azumaya_up_to(13, &Sequential).unwrap();
        assert!(reports.iter().all(|f| f.full_matrix_ring));
        let norms: Vec<u64> = reports.iter().map(|f| f.residue_size).collect();
        assert_eq!(norms, [7, 8, 13, 13, 13, 27, 125, 1331]);
    }
}
