//! Rigid, Weil and inertial classes of Weil L-parameters.
//!
//! Everything lives on the lattice `L = X_*(T^v) = X^*(T)`: an inertial
//! parameter is a torsion point `v` of `L (x) Q/Z`, and a Frobenius image is
//! an element `x` of the coset `twist * W` with `x v = q v`.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use crate::arith::check_q;
use crate::centralizer::{centralizer_roots, reflection_subgroup, weyl_stabilizer, CosetGroup, PseudoLevi};
use crate::error::{Error, Result};
use crate::finite_torus::{fixed_point_group, FiniteAbelianGroup, TorsionPoint};
use crate::matrix::Matrix;
use crate::root_datum::{dual_twist, BasedRootDatum, GaloisTwist};
use crate::snf::smith;
use crate::weyl::{generate, FrobeniusCoset, FrobeniusElement, TwistedClass, DEFAULT_WEYL_BOUND};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub weyl: usize,
    pub level: u32,
    pub torus_order: i64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { weyl: DEFAULT_WEYL_BOUND, level: 64, torus_order: 1_000_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RigidWeilParameter {
    pub inertial: TorsionPoint,
    pub frob: FrobeniusElement,
}

/// A `W`-orbit of rigid parameters.
#[derive(Debug, Clone, Serialize)]
pub struct RigidClass {
    pub parameter: RigidWeilParameter,
    /// Index into the twisted classes.
    pub torus_class: usize,
    /// Number of pairs `(v, x)` in the orbit.
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct InertialClass {
    pub representative: TorsionPoint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeilParameterClass {
    pub inertial_rep: TorsionPoint,
    pub frob_rep: FrobeniusElement,
    /// Frobenius elements compatible with `inertial_rep` in this class.
    pub size: usize,
}

/// Local data at one inertial point.
#[derive(Debug, Clone)]
pub struct InertialData {
    pub point: TorsionPoint,
    pub levi: PseudoLevi,
    pub stabilizer: Vec<usize>,
    pub reflection: Vec<usize>,
    pub omega: CosetGroup,
    /// Weyl parts of all compatible Frobenius elements.
    pub frobenius: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct ParameterSpace {
    pub dual: BasedRootDatum,
    pub coset: FrobeniusCoset,
    pub q: i64,
    pub bounds: Bounds,
    classes: Vec<TwistedClass>,
    class_of: Vec<usize>,
}

impl ParameterSpace {
    /// Parameters for the group with datum `datum` and Frobenius `twist` on its character lattice.
    pub fn for_group(datum: &BasedRootDatum, twist: &GaloisTwist, q: i64, bounds: Bounds) -> Result<Self> {
        let dt = dual_twist(twist, datum)?;
        Self::new(&datum.dualize(), &dt, q, bounds)
    }

    /// Parameters from the dual datum and the dual twist.
    pub fn new(dual: &BasedRootDatum, dual_twist: &GaloisTwist, q: i64, bounds: Bounds) -> Result<Self> {
        check_q(q)?;
        GaloisTwist::new(dual_twist.matrix.clone(), dual)?;
        let weyl = generate(dual, bounds.weyl)?.contragredient();
        let twist = dual_twist.matrix.contragredient().ok_or_else(|| Error::TwistMismatch("not invertible".into()))?;
        let coset = FrobeniusCoset::new(weyl, twist)?;
        let classes = coset.twisted_classes();
        let mut class_of = vec![0; coset.weyl.order()];
        for (c, k) in classes.iter().enumerate() {
            for &w in &k.members {
                class_of[w] = c;
            }
        }
        let space = ParameterSpace { dual: dual.clone(), coset, q, bounds, classes, class_of };
        for k in &space.classes {
            space.fixed_group(&k.representative)?;
        }
        Ok(space)
    }

    pub fn rank(&self) -> usize {
        self.dual.rank
    }

    pub fn weyl_order(&self) -> usize {
        self.coset.weyl.order()
    }

    pub fn twisted_classes(&self) -> &[TwistedClass] {
        &self.classes
    }

    pub fn class_of(&self, x: &FrobeniusElement) -> usize {
        self.class_of[x.weyl_part]
    }

    pub fn fixed_group(&self, x: &FrobeniusElement) -> Result<FiniteAbelianGroup> {
        let det = Matrix::scalar(self.rank(), self.q).sub(&x.combined).det()?.unsigned_abs() as i64;
        if det > self.bounds.torus_order {
            return Err(Error::BoundExceeded { what: "torus order", bound: self.bounds.torus_order as u64, size: det as u64 });
        }
        let g = fixed_point_group(&x.combined, self.q)?;
        if let Some(bad) = g.generators.iter().find(|p| p.level() > self.bounds.level) {
            return Err(Error::BoundExceeded { what: "level", bound: self.bounds.level as u64, size: bad.level() as u64 });
        }
        Ok(g)
    }

    pub fn is_compatible(&self, v: &TorsionPoint, x: &FrobeniusElement) -> bool {
        v.is_fixed_by(&x.combined, self.q)
    }

    /// Canonical representative of the `W`-orbit of `v`, with an element carrying `v` to it.
    pub fn canonical_point(&self, v: &TorsionPoint) -> (TorsionPoint, usize) {
        let w = &self.coset.weyl;
        let mut best = (v.clone(), 0usize);
        let mut seen = HashMap::from([(v.clone(), 0usize)]);
        let mut queue = VecDeque::from([(v.clone(), 0usize)]);
        while let Some((p, u)) = queue.pop_front() {
            for &s in w.generators() {
                let img = p.apply(w.matrix(s));
                if !seen.contains_key(&img) {
                    let su = w.mul(s, u);
                    seen.insert(img.clone(), su);
                    if img < best.0 {
                        best = (img.clone(), su);
                    }
                    queue.push_back((img, su));
                }
            }
        }
        best
    }

    pub fn orbit_size(&self, v: &TorsionPoint) -> usize {
        let w = &self.coset.weyl;
        let mut seen = BTreeSet::from([v.clone()]);
        let mut queue = VecDeque::from([v.clone()]);
        while let Some(p) = queue.pop_front() {
            for &s in w.generators() {
                let img = p.apply(w.matrix(s));
                if seen.insert(img.clone()) {
                    queue.push_back(img);
                }
            }
        }
        seen.len()
    }

    /// All rigid classes, grouped by twisted class.
    pub fn enumerate_rigid(&self) -> Result<Vec<RigidClass>> {
        let w = &self.coset.weyl;
        let mut out = Vec::new();
        for (ci, class) in self.classes.iter().enumerate() {
            let x = &class.representative;
            let g = self.fixed_group(x)?;
            let cent = self.coset.centralizer(x);
            let mut seen = BTreeSet::new();
            for v in g.elements() {
                if seen.contains(&v) {
                    continue;
                }
                let orbit: BTreeSet<TorsionPoint> = cent.iter().map(|&u| v.apply(w.matrix(u))).collect();
                let rep = orbit.iter().next().expect("nonempty").clone();
                out.push(RigidClass {
                    parameter: RigidWeilParameter { inertial: rep, frob: x.clone() },
                    torus_class: ci,
                    size: orbit.len() * class.size(),
                });
                seen.extend(orbit);
            }
        }
        Ok(out)
    }

    /// Rigid classes over one twisted class.
    pub fn rigid_count(&self, class: usize) -> Result<usize> {
        Ok(self.enumerate_rigid()?.iter().filter(|r| r.torus_class == class).count())
    }

    /// `W_v`, `W(R_v)`, `Omega_v` and the compatible Frobenius elements at `v`.
    pub fn inertial_data(&self, v: &TorsionPoint) -> InertialData {
        let w = &self.coset.weyl;
        let levi = centralizer_roots(&self.dual, v);
        let stabilizer = weyl_stabilizer(w, v);
        let reflection = reflection_subgroup(w, &self.dual, &levi);
        let omega = CosetGroup::new(w, &stabilizer, &reflection);
        let frobenius = (0..w.order()).filter(|&x| self.is_compatible(v, &self.coset.element(x))).collect();
        InertialData { point: v.clone(), levi, stabilizer, reflection, omega, frobenius }
    }

    /// Canonical element of the Weil class of `x` at `v`: `x` modulo right
    /// multiplication by `W(R_v)` and conjugation by `W_v`.
    fn weil_key(&self, data: &InertialData, x: usize) -> usize {
        let w = &self.coset.weyl;
        let mut best: Option<FrobeniusElement> = None;
        for &o in &data.omega.reps {
            let y = self.coset.conjugate(o, x);
            for &r in &data.reflection {
                let e = self.coset.element(w.mul(y, r));
                if best.as_ref().map_or(true, |b| e.combined < b.combined) {
                    best = Some(e);
                }
            }
        }
        best.expect("nonempty").weyl_part
    }

    pub fn rigid_to_weil(&self, r: &RigidWeilParameter) -> Result<WeilParameterClass> {
        if !self.is_compatible(&r.inertial, &r.frob) {
            return Err(Error::Incompatible(format!("{} is not fixed by the Frobenius", r.inertial)));
        }
        let (v, u) = self.canonical_point(&r.inertial);
        let x = self.coset.conjugate(u, r.frob.weyl_part);
        let data = self.inertial_data(&v);
        let key = self.weil_key(&data, x);
        let size = data.frobenius.iter().filter(|&&y| self.weil_key(&data, y) == key).count();
        Ok(WeilParameterClass { inertial_rep: v, frob_rep: self.coset.element(key), size })
    }

    pub fn inertial_class(&self, p: &WeilParameterClass) -> InertialClass {
        InertialClass { representative: self.canonical_point(&p.inertial_rep).0 }
    }

    /// All inertial classes, sorted by representative.
    pub fn inertial_classes(&self) -> Result<Vec<InertialClass>> {
        let mut reps = BTreeSet::new();
        for class in &self.classes {
            for v in self.fixed_group(&class.representative)?.elements() {
                reps.insert(self.canonical_point(&v).0);
            }
        }
        Ok(reps.into_iter().map(|representative| InertialClass { representative }).collect())
    }

    /// Weil classes at one canonical inertial point.
    pub fn weil_classes_at(&self, v: &TorsionPoint) -> Vec<WeilParameterClass> {
        let data = self.inertial_data(v);
        let mut keys: BTreeMap<usize, usize> = BTreeMap::new();
        for &x in &data.frobenius {
            *keys.entry(self.weil_key(&data, x)).or_default() += 1;
        }
        let mut out: Vec<WeilParameterClass> = keys
            .into_iter()
            .map(|(k, size)| WeilParameterClass { inertial_rep: v.clone(), frob_rep: self.coset.element(k), size })
            .collect();
        out.sort_by(|a, b| a.frob_rep.combined.cmp(&b.frob_rep.combined));
        out
    }

    pub fn weil_classes(&self) -> Result<Vec<WeilParameterClass>> {
        Ok(self.inertial_classes()?.iter().flat_map(|c| self.weil_classes_at(&c.representative)).collect())
    }

    /// `|W(R_v)^x|`.
    pub fn packet_size_bound(&self, v: &TorsionPoint, x: &FrobeniusElement) -> Result<usize> {
        if !self.is_compatible(v, x) {
            return Err(Error::Incompatible(format!("{v} is not fixed by the Frobenius")));
        }
        let w = &self.coset.weyl;
        let levi = centralizer_roots(&self.dual, v);
        let refl = reflection_subgroup(w, &self.dual, &levi);
        Ok(refl
            .iter()
            .filter(|&&r| {
                let m = w.matrix(r);
                m.mul(&x.combined) == x.combined.mul(m)
            })
            .count())
    }
}

/// The torus correspondence: parameter `v` goes to the class of `(q - M) v`
/// in `X^*(T) / (q - M) X^*(T)`, the character group of `T(F_q)`.
#[derive(Debug, Clone, Serialize)]
pub struct TorusBijection {
    pub parameters: Vec<TorsionPoint>,
    /// Characters as coordinates modulo the elementary divisors.
    pub characters: Vec<Vec<i64>>,
    pub divisors: Vec<i64>,
}

impl TorusBijection {
    pub fn is_bijective(&self) -> bool {
        let set: BTreeSet<&Vec<i64>> = self.characters.iter().collect();
        set.len() == self.characters.len() && self.characters.len() == self.divisors.iter().product::<i64>() as usize
    }
}

pub fn torus_langlands(datum: &BasedRootDatum, twist: &GaloisTwist, q: i64) -> Result<TorusBijection> {
    if datum.has_roots() {
        return Err(Error::NotATorus);
    }
    check_q(q)?;
    let a = Matrix::scalar(datum.rank, q).sub(&twist.matrix);
    let g = fixed_point_group(&twist.matrix, q)?;
    let s = smith(&a)?;
    let divisors: Vec<i64> = s.diagonal.iter().copied().filter(|&d| d > 1).collect();
    let mut parameters = g.elements();
    parameters.sort();
    let characters = parameters
        .iter()
        .map(|v| {
            let u: Vec<i64> = a.mul_vec(v.numerators()).iter().map(|x| x / v.denominator()).collect();
            let c = s.left.mul_vec(&u);
            (0..c.len()).filter(|&i| s.diagonal[i] > 1).map(|i| c[i].rem_euclid(s.diagonal[i])).collect()
        })
        .collect();
    Ok(TorusBijection { parameters, characters, divisors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_datum::{standard_datum, Family};

    fn space(f: Family, n: usize, q: i64) -> ParameterSpace {
        let d = standard_datum(f, n).unwrap();
        ParameterSpace::for_group(&d, &GaloisTwist::trivial(d.rank), q, Bounds::default()).unwrap()
    }

    #[test]
    fn rigid_counts() {
        let s = space(Family::GL, 2, 3);
        let per: Vec<usize> = (0..2).map(|c| s.rigid_count(c).unwrap()).collect();
        let mut sorted = per.clone();
        sorted.sort();
        assert_eq!(sorted, vec![3, 5]);
        assert_eq!(space(Family::Torus, 1, 3).enumerate_rigid().unwrap().len(), 2);
        let s = space(Family::GL, 3, 2);
        let mut per: Vec<usize> = (0..3).map(|c| s.rigid_count(c).unwrap()).collect();
        per.sort();
        assert_eq!(per, vec![1, 2, 3]);
    }

    #[test]
    fn rigid_parameters_satisfy_iterated_compatibility() {
        let s = space(Family::Sp, 4, 3);
        for r in s.enumerate_rigid().unwrap() {
            let x = &r.parameter.frob.combined;
            let v = &r.parameter.inertial;
            for m in 1..=4u32 {
                assert_eq!(v.apply(&x.pow(m)), v.scale(3i64.pow(m)));
            }
        }
    }

    #[test]
    fn inertial_counts() {
        // six semisimple classes in GL2(F3)
        assert_eq!(space(Family::GL, 2, 3).inertial_classes().unwrap().len(), 6);
        assert_eq!(space(Family::SL, 2, 3).inertial_classes().unwrap().len(), 3);
        let s = space(Family::GL, 2, 3);
        let zero = &s.inertial_classes().unwrap()[0];
        assert!(zero.representative.is_zero());
    }

    #[test]
    fn weil_collapse() {
        let s = space(Family::SL, 2, 3);
        let rigid = s.enumerate_rigid().unwrap();
        let over_zero: Vec<_> = rigid.iter().filter(|r| r.parameter.inertial.is_zero()).collect();
        assert_eq!(over_zero.len(), 2);
        let a = s.rigid_to_weil(&over_zero[0].parameter).unwrap();
        let b = s.rigid_to_weil(&over_zero[1].parameter).unwrap();
        assert_eq!(a, b);
        let quarter = rigid.iter().find(|r| r.parameter.inertial.denominator() == 4).unwrap();
        assert_eq!(s.rigid_to_weil(&quarter.parameter).unwrap().size, 1);
        // v = 1/2 carries two Weil classes (disconnected centralizer)
        let half = TorsionPoint::new(vec![1], 2, 3).unwrap();
        assert_eq!(s.weil_classes_at(&half).len(), 2);
        assert_eq!(s.weil_classes().unwrap().len(), 4);
    }

    #[test]
    fn packet_bounds() {
        let s = space(Family::GL, 2, 3);
        let id = s.coset.element(0);
        assert_eq!(s.packet_size_bound(&TorsionPoint::zero(2, 3), &id).unwrap(), 2);
        let s = space(Family::SL, 2, 3);
        let half = TorsionPoint::new(vec![1], 2, 3).unwrap();
        assert_eq!(s.packet_size_bound(&half, &s.coset.element(0)).unwrap(), 1);
        let quarter = TorsionPoint::new(vec![1], 4, 3).unwrap();
        assert!(s.packet_size_bound(&quarter, &s.coset.element(0)).is_err());
    }

    #[test]
    fn torus_bijections() {
        let t1 = BasedRootDatum::torus(1);
        let b = torus_langlands(&t1, &GaloisTwist::trivial(1), 3).unwrap();
        assert_eq!(b.parameters.len(), 2);
        assert!(b.is_bijective());
        let neg = GaloisTwist::new(Matrix::from_rows(&[vec![-1]]), &t1).unwrap();
        let b = torus_langlands(&t1, &neg, 3).unwrap();
        assert_eq!(b.parameters.len(), 4);
        assert!(b.is_bijective());
        let t2 = BasedRootDatum::torus(2);
        let swap = GaloisTwist::new(Matrix::from_rows(&[vec![0, 1], vec![1, 0]]), &t2).unwrap();
        let b = torus_langlands(&t2, &swap, 2).unwrap();
        assert_eq!(b.parameters.len(), 3);
        assert!(b.is_bijective());
        let gl = standard_datum(Family::GL, 2).unwrap();
        assert_eq!(torus_langlands(&gl, &GaloisTwist::trivial(2), 3).unwrap_err(), Error::NotATorus);
    }
}
