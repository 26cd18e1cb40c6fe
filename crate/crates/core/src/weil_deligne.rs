//! Weil-Deligne parameters: an inertial point, a nilpotent orbit in its
//! pseudo-Levi, and a Frobenius image in the extended component group.
//!
//! At a point `v` with `Omega_v = W_v / W(R_v)` the component group of the
//! centralizer of `(s, u)` is modelled as `Stab_Omega(O) ⋉ prod_i A_i(O_i)`
//! with `A_i` the component group of the unipotent class in the adjoint group
//! of the `i`-th simple factor. Lusztig's quotient replaces each `A_i` by its
//! canonical quotient.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::centralizer::{factor_map, CartanType, Factor, FactorMap, ComponentGroupPresentation, PseudoLevi};
use crate::error::{Error, Result};
use crate::finite_torus::TorsionPoint;
use crate::group::FiniteGroup;
use crate::matrix::Matrix;
use crate::partition::{format_partition, is_special, is_very_even, multiplicities, typed_partitions, Partition};
use crate::weil_params::{InertialData, ParameterSpace};
use crate::weyl::FrobeniusElement;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum VeryEvenTag {
    I,
    II,
}

/// A nilpotent orbit in one simple factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FactorOrbit {
    pub kind: CartanType,
    pub rank: usize,
    pub partition: Partition,
    pub tag: Option<VeryEvenTag>,
}

impl FactorOrbit {
    pub fn is_special(&self) -> bool {
        is_special(self.kind, &self.partition)
    }

    pub fn is_zero(&self) -> bool {
        self.partition.iter().all(|&p| p == 1)
    }

    fn fork_swapped(&self) -> Self {
        let mut o = self.clone();
        o.tag = o.tag.map(|t| if t == VeryEvenTag::I { VeryEvenTag::II } else { VeryEvenTag::I });
        o
    }
}

impl fmt::Display for FactorOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_partition(&self.partition))?;
        if let Some(t) = self.tag {
            write!(f, "{t:?}")?;
        }
        Ok(())
    }
}

/// One orbit per simple factor of a pseudo-Levi, in factor order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct NilpotentOrbitLabel {
    pub factors: Vec<FactorOrbit>,
}

impl NilpotentOrbitLabel {
    pub fn zero(levi: &PseudoLevi) -> Result<Self> {
        let factors = levi
            .factors
            .iter()
            .map(|f| Ok(FactorOrbit { kind: f.kind, rank: f.rank, partition: vec![1; crate::partition::partition_size(f.kind, f.rank)?], tag: None }))
            .collect::<Result<_>>()?;
        Ok(NilpotentOrbitLabel { factors })
    }

    pub fn is_zero(&self) -> bool {
        self.factors.iter().all(FactorOrbit::is_zero)
    }

    pub fn is_special(&self) -> bool {
        self.factors.iter().all(FactorOrbit::is_special)
    }

    pub fn partitions(&self) -> Vec<String> {
        self.factors.iter().map(|o| o.to_string()).collect()
    }
}

impl fmt::Display for NilpotentOrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "-");
        }
        write!(f, "{}", self.partitions().join(" x "))
    }
}

fn check_classical(f: &Factor) -> Result<()> {
    if f.is_classical() {
        Ok(())
    } else {
        Err(Error::UnsupportedFactor(format!("unsupported exceptional factor {}", f.name())))
    }
}

pub fn factor_orbits(f: &Factor) -> Result<Vec<FactorOrbit>> {
    check_classical(f)?;
    let mut out = Vec::new();
    for partition in typed_partitions(f.kind, f.rank)? {
        if f.kind == CartanType::D && is_very_even(&partition) {
            for tag in [VeryEvenTag::I, VeryEvenTag::II] {
                out.push(FactorOrbit { kind: f.kind, rank: f.rank, partition: partition.clone(), tag: Some(tag) });
            }
        } else {
            out.push(FactorOrbit { kind: f.kind, rank: f.rank, partition, tag: None });
        }
    }
    Ok(out)
}

/// All orbit labels of a pseudo-Levi (the product over factors).
pub fn enumerate_orbits(levi: &PseudoLevi) -> Result<Vec<NilpotentOrbitLabel>> {
    let mut labels = vec![NilpotentOrbitLabel { factors: Vec::new() }];
    for f in &levi.factors {
        let orbits = factor_orbits(f)?;
        labels = labels
            .into_iter()
            .flat_map(|l| {
                orbits.iter().map(move |o| {
                    let mut l = l.clone();
                    l.factors.push(o.clone());
                    l
                })
            })
            .collect();
    }
    Ok(labels)
}

/// A quotient `V / K` of subspaces of `(Z/2)^k`, vectors as bit masks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gf2Quotient {
    kill: Vec<u64>,
    elements: Vec<u64>,
}

impl Gf2Quotient {
    /// `ambient / (span(kill) ∩ ambient)`.
    pub fn new(ambient: &[u64], kill: &[u64]) -> Self {
        let inside = |x: u64| reduce_by(&echelon(ambient), x) == 0;
        let kill: Vec<u64> = span(kill).into_iter().filter(|&x| inside(x)).collect();
        let kill = echelon(&kill);
        let elements: BTreeSet<u64> = span(ambient).into_iter().map(|x| reduce_by(&kill, x)).collect();
        Gf2Quotient { kill, elements: elements.into_iter().collect() }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn reduce(&self, x: u64) -> u64 {
        reduce_by(&self.kill, x)
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }
}

fn reduce_by(basis: &[u64], mut x: u64) -> u64 {
    for &b in basis {
        let top = 63 - b.leading_zeros();
        if x >> top & 1 == 1 {
            x ^= b;
        }
    }
    x
}

fn echelon(vs: &[u64]) -> Vec<u64> {
    let mut basis: Vec<u64> = Vec::new();
    for &v in vs {
        let r = reduce_by(&basis, v);
        if r != 0 {
            basis.push(r);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis
}

fn span(vs: &[u64]) -> Vec<u64> {
    let basis = echelon(vs);
    (0u64..1 << basis.len())
        .map(|m| basis.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).fold(0, |acc, (_, &b)| acc ^ b))
        .collect()
}

/// Component group of a unipotent class in the adjoint group of one factor,
/// with its canonical quotient. Bit `i` stands for `parts[i]`.
#[derive(Debug, Clone)]
pub struct FactorAGroup {
    pub parts: Vec<usize>,
    pub a: Gf2Quotient,
    pub abar: Gf2Quotient,
}

pub fn factor_a_group(o: &FactorOrbit) -> FactorAGroup {
    let parity = match o.kind {
        CartanType::B | CartanType::D => 1,
        CartanType::C => 0,
        _ => {
            let trivial = Gf2Quotient::new(&[], &[]);
            return FactorAGroup { parts: Vec::new(), a: trivial.clone(), abar: trivial };
        }
    };
    let mult = multiplicities(&o.partition);
    let parts: Vec<usize> = mult.keys().rev().copied().filter(|p| p % 2 == parity).collect();
    let k = parts.len();
    let bit = |i: usize| 1u64 << i;
    let ambient: Vec<u64> = if o.kind == CartanType::D {
        (0..k.saturating_sub(1)).map(|i| bit(i) | bit(i + 1)).collect()
    } else {
        (0..k).map(bit).collect()
    };
    let z = (0..k).filter(|&i| mult[&parts[i]] % 2 == 1).fold(0, |acc, i| acc | bit(i));
    let ge = |r: usize| o.partition.iter().filter(|&&p| p >= r).count();
    let want_odd = o.kind != CartanType::B;
    let mut kill = vec![z];
    for i in 0..k {
        if (ge(parts[i]) % 2 == 1) == want_odd {
            kill.push(if i + 1 < k { bit(i) | bit(i + 1) } else { bit(i) });
        }
    }
    FactorAGroup { parts, a: Gf2Quotient::new(&ambient, &[z]), abar: Gf2Quotient::new(&ambient, &kill) }
}

/// Local data at one inertial point used by the constructions below.
struct Local<'a> {
    space: &'a ParameterSpace,
    data: InertialData,
    omega_maps: Vec<FactorMap>,
}

impl<'a> Local<'a> {
    fn new(space: &'a ParameterSpace, v: &TorsionPoint) -> Result<Self> {
        let data = space.inertial_data(v);
        for f in &data.levi.factors {
            check_classical(f)?;
        }
        let w = &space.coset.weyl;
        let omega_maps = data
            .omega
            .reps
            .iter()
            .map(|&r| factor_map(&space.dual, &data.levi, &contra(w.matrix(r))))
            .collect::<Result<_>>()?;
        Ok(Local { space, data, omega_maps })
    }

    fn act(&self, map: &FactorMap, label: &NilpotentOrbitLabel) -> NilpotentOrbitLabel {
        let mut out = label.clone();
        for (i, o) in label.factors.iter().enumerate() {
            out.factors[map.target[i]] = if map.swaps_fork(&self.data.levi, i) { o.fork_swapped() } else { o.clone() };
        }
        out
    }

    fn canonical_label(&self, label: &NilpotentOrbitLabel) -> NilpotentOrbitLabel {
        self.omega_maps.iter().map(|m| self.act(m, label)).min().expect("identity present")
    }

    fn stabilizer(&self, label: &NilpotentOrbitLabel) -> Vec<usize> {
        (0..self.omega_maps.len()).filter(|&p| self.act(&self.omega_maps[p], label) == *label).collect()
    }

    fn frobenius_map(&self, y: usize) -> Result<FactorMap> {
        factor_map(&self.space.dual, &self.data.levi, &contra(&self.space.coset.element(y).combined))
    }

    /// First compatible Frobenius element fixing the label.
    fn frobenius_for(&self, label: &NilpotentOrbitLabel) -> Result<Option<usize>> {
        for &y in &self.data.frobenius {
            if self.act(&self.frobenius_map(y)?, label) == *label {
                return Ok(Some(y));
            }
        }
        Ok(None)
    }

    fn build(&self, label: &NilpotentOrbitLabel, bar: bool) -> Semidirect {
        let stab = self.stabilizer(label);
        let quotients: Vec<Gf2Quotient> = label
            .factors
            .iter()
            .map(|o| {
                let g = factor_a_group(o);
                if bar { g.abar } else { g.a }
            })
            .collect();
        let mut tuples: Vec<Vec<u64>> = vec![Vec::new()];
        for q in &quotients {
            tuples = tuples.into_iter().flat_map(|t| q.elements().iter().map(move |&e| [t.clone(), vec![e]].concat())).collect();
        }
        let elems: Vec<(usize, Vec<u64>)> = stab.iter().flat_map(|&p| tuples.iter().map(move |t| (p, t.clone()))).collect();
        let index: HashMap<(usize, Vec<u64>), usize> = elems.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let omega = &self.data.omega.group;
        let table = elems
            .iter()
            .map(|(a, n1)| {
                elems
                    .iter()
                    .map(|(b, n2)| {
                        let moved = permute(&self.omega_maps[*a], n2);
                        let n: Vec<u64> = (0..n1.len()).map(|i| quotients[i].reduce(n1[i] ^ moved[i])).collect();
                        index[&(omega.mul(*a, *b), n)]
                    })
                    .collect()
            })
            .collect();
        Semidirect { group: FiniteGroup::from_table(table), elems, index, quotients }
    }

    fn presentation(&self, s: &Semidirect) -> ComponentGroupPresentation {
        let coset_reps = s.elems.iter().map(|(p, _)| self.data.omega.reps[*p]).collect();
        ComponentGroupPresentation { coset_reps, group: s.group.clone(), frobenius: None }
    }
}

/// `n -> g n g^-1` on tuples indexed by factors.
fn permute(map: &FactorMap, n: &[u64]) -> Vec<u64> {
    let mut out = vec![0; n.len()];
    for (i, &x) in n.iter().enumerate() {
        out[map.target[i]] = x;
    }
    out
}

fn contra(m: &Matrix) -> Matrix {
    m.contragredient().expect("unimodular")
}

struct Semidirect {
    group: FiniteGroup,
    elems: Vec<(usize, Vec<u64>)>,
    index: HashMap<(usize, Vec<u64>), usize>,
    quotients: Vec<Gf2Quotient>,
}

fn require_labels(local: &Local, label: &NilpotentOrbitLabel) -> Result<()> {
    let ok = label.factors.len() == local.data.levi.factors.len()
        && label.factors.iter().zip(&local.data.levi.factors).all(|(o, f)| o.kind == f.kind && o.rank == f.rank);
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("label {label} does not match pseudo-Levi {}", local.data.levi.type_label)))
    }
}

/// `A(phi_0)` at `(v, label)`.
pub fn a_group(space: &ParameterSpace, v: &TorsionPoint, label: &NilpotentOrbitLabel) -> Result<ComponentGroupPresentation> {
    let local = Local::new(space, v)?;
    require_labels(&local, label)?;
    Ok(local.presentation(&local.build(label, false)))
}

#[derive(Debug, Clone)]
pub struct CanonicalQuotient {
    pub a: ComponentGroupPresentation,
    pub abar: ComponentGroupPresentation,
    /// `projection[i]` is the image in `abar` of element `i` of `a`.
    pub projection: Vec<usize>,
}

impl CanonicalQuotient {
    pub fn is_surjective_homomorphism(&self) -> bool {
        let (a, b) = (&self.a.group, &self.abar.group);
        let hom = (0..a.order()).all(|x| (0..a.order()).all(|y| self.projection[a.mul(x, y)] == b.mul(self.projection[x], self.projection[y])));
        let image: BTreeSet<usize> = self.projection.iter().copied().collect();
        hom && image.len() == b.order()
    }
}

pub fn canonical_quotient(space: &ParameterSpace, v: &TorsionPoint, label: &NilpotentOrbitLabel) -> Result<CanonicalQuotient> {
    let local = Local::new(space, v)?;
    require_labels(&local, label)?;
    let a = local.build(label, false);
    let abar = local.build(label, true);
    let projection = a
        .elems
        .iter()
        .map(|(p, n)| {
            let m: Vec<u64> = n.iter().zip(&abar.quotients).map(|(&x, q)| q.reduce(x)).collect();
            abar.index[&(*p, m)]
        })
        .collect();
    Ok(CanonicalQuotient { a: local.presentation(&a), abar: local.presentation(&abar), projection })
}

/// `Ã(phi_0)`: `Abar` extended by the powers of a Frobenius `y0`, acting by
/// `theta(b) = y0^-1 b y0`. Element `(b, m)` stands for `b y0^m`.
#[derive(Debug, Clone)]
pub struct ExtendedComponentGroup {
    pub base: FiniteGroup,
    pub theta: Vec<usize>,
    pub y0: FrobeniusElement,
    /// Weyl-coset representatives of the elements `y0 b` over `sigma`.
    pub frobenius: Vec<FrobeniusElement>,
}

impl ExtendedComponentGroup {
    fn theta_pow(&self, b: usize, m: i64) -> usize {
        let n = self.base.order();
        let mut inv = vec![0; n];
        for (i, &t) in self.theta.iter().enumerate() {
            inv[t] = i;
        }
        let mut x = b;
        for _ in 0..m.unsigned_abs() {
            x = if m > 0 { self.theta[x] } else { inv[x] };
        }
        x
    }

    pub fn mul(&self, (b1, m1): (usize, i64), (b2, m2): (usize, i64)) -> (usize, i64) {
        (self.base.mul(b1, self.theta_pow(b2, -m1)), m1 + m2)
    }

    pub fn is_trivial_action(&self) -> bool {
        self.theta.iter().enumerate().all(|(i, &t)| i == t)
    }

    /// Classes of `y0 b` under `Abar`-conjugation: `b ~ theta(c) b c^-1`.
    pub fn twisted_classes(&self) -> Vec<Vec<usize>> {
        let g = &self.base;
        let mut seen = vec![false; g.order()];
        let mut out = Vec::new();
        for b in 0..g.order() {
            if seen[b] {
                continue;
            }
            let orbit: BTreeSet<usize> = (0..g.order()).map(|c| g.mul(g.mul(self.theta[c], b), g.inv(c))).collect();
            for &x in &orbit {
                seen[x] = true;
            }
            out.push(orbit.into_iter().collect());
        }
        out
    }

    /// `A_phi`: elements of `Abar` commuting with `y0 b`.
    pub fn centralizer(&self, b: usize) -> Vec<usize> {
        let g = &self.base;
        (0..g.order()).filter(|&c| g.mul(g.mul(self.theta[c], b), g.inv(c)) == b).collect()
    }
}

pub fn extended_group(space: &ParameterSpace, v: &TorsionPoint, label: &NilpotentOrbitLabel) -> Result<ExtendedComponentGroup> {
    let local = Local::new(space, v)?;
    require_labels(&local, label)?;
    let y = local
        .frobenius_for(label)?
        .ok_or_else(|| Error::NoCompatibleFrobenius(format!("no Frobenius at {v} fixes {label}")))?;
    extended_from(&local, label, y)
}

fn extended_from(local: &Local, label: &NilpotentOrbitLabel, y: usize) -> Result<ExtendedComponentGroup> {
    let space = local.space;
    let w = &space.coset.weyl;
    let abar = local.build(label, true);
    let y0 = space.coset.element(y);
    let m_inv = y0.combined.inverse().expect("unimodular");
    let ymap = local.frobenius_map(y)?;
    let theta = abar
        .elems
        .iter()
        .map(|(p, n)| {
            let m = m_inv.mul(w.matrix(local.data.omega.reps[*p])).mul(&y0.combined);
            let idx = w.index_of(&m).expect("Frobenius normalizes W");
            let p2 = local.data.omega.locate(w, idx).expect("Frobenius normalizes W_v");
            let n2: Vec<u64> = (0..n.len()).map(|j| n[ymap.target[j]]).collect();
            abar.index[&(p2, n2)]
        })
        .collect();
    let frobenius = abar
        .elems
        .iter()
        .map(|(p, _)| {
            let m = y0.combined.mul(w.matrix(local.data.omega.reps[*p]));
            space.coset.find(&m).expect("coset element")
        })
        .collect();
    Ok(ExtendedComponentGroup { base: abar.group, theta, y0, frobenius })
}

#[derive(Debug, Clone, Serialize)]
pub struct WdParameterClass {
    pub inertial: TorsionPoint,
    pub level: u32,
    pub pseudo_levi_type: String,
    pub orbit: NilpotentOrbitLabel,
    pub special: bool,
    pub a_order: usize,
    pub abar_order: usize,
    pub a_phi_order: usize,
    /// `|Irr(A_phi)|`.
    pub a_phi_classes: usize,
    pub frob_coset_id: usize,
    pub frob: FrobeniusElement,
}

#[derive(Debug, Clone, Serialize)]
pub struct WdEnumeration {
    pub classes: Vec<WdParameterClass>,
    pub total_irr: usize,
}

/// WD classes at one canonical inertial point, special orbits only.
pub fn special_wd_at(space: &ParameterSpace, v: &TorsionPoint) -> Result<Vec<WdParameterClass>> {
    let local = Local::new(space, v)?;
    let labels: BTreeSet<NilpotentOrbitLabel> = enumerate_orbits(&local.data.levi)?
        .iter()
        .filter(|l| l.is_special())
        .map(|l| local.canonical_label(l))
        .collect();
    let mut out = Vec::new();
    for label in labels {
        let Some(y) = local.frobenius_for(&label)? else { continue };
        let a_order = local.build(&label, false).group.order();
        let ext = extended_from(&local, &label, y)?;
        for (id, class) in ext.twisted_classes().iter().enumerate() {
            let b = class[0];
            let cent = ext.centralizer(b);
            out.push(WdParameterClass {
                inertial: v.clone(),
                level: v.level(),
                pseudo_levi_type: local.data.levi.type_label.clone(),
                orbit: label.clone(),
                special: true,
                a_order,
                abar_order: ext.base.order(),
                a_phi_order: cent.len(),
                a_phi_classes: ext.base.class_count_in(&cent),
                frob_coset_id: id,
                frob: ext.frobenius[b].clone(),
            });
        }
    }
    Ok(out)
}

/// All special Frobenius-semisimple WD classes, with `sum |Irr(A_phi)|`.
pub fn enumerate_special_wd(space: &ParameterSpace) -> Result<WdEnumeration> {
    let mut classes = Vec::new();
    for c in space.inertial_classes()? {
        classes.extend(special_wd_at(space, &c.representative)?);
    }
    let total_irr = classes.iter().map(|c| c.a_phi_classes).sum();
    Ok(WdEnumeration { classes, total_irr })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_datum::{standard_datum, Family, GaloisTwist};
    use crate::weil_params::Bounds;

    fn space(f: Family, n: usize, q: i64) -> ParameterSpace {
        let d = standard_datum(f, n).unwrap();
        ParameterSpace::for_group(&d, &GaloisTwist::trivial(d.rank), q, Bounds::default()).unwrap()
    }

    fn orbit(kind: CartanType, rank: usize, partition: Vec<usize>) -> FactorOrbit {
        FactorOrbit { kind, rank, partition, tag: None }
    }

    #[test]
    fn factor_a_groups() {
        let g = factor_a_group(&orbit(CartanType::C, 2, vec![2, 2]));
        assert_eq!((g.a.order(), g.abar.order()), (2, 2));
        let g = factor_a_group(&orbit(CartanType::B, 2, vec![2, 2, 1]));
        assert_eq!(g.a.order(), 1);
        let g = factor_a_group(&orbit(CartanType::B, 2, vec![3, 1, 1]));
        assert_eq!((g.a.order(), g.abar.order()), (2, 2));
        let g = factor_a_group(&orbit(CartanType::A, 3, vec![2, 2]));
        assert_eq!((g.a.order(), g.abar.order()), (1, 1));
    }

    #[test]
    fn orbit_counts() {
        let s = space(Family::GL, 2, 3);
        let levi = s.inertial_data(&TorsionPoint::zero(2, 3)).levi;
        assert_eq!(enumerate_orbits(&levi).unwrap().len(), 2);
    }

    #[test]
    fn counting_small_groups() {
        assert_eq!(enumerate_special_wd(&space(Family::GL, 2, 3)).unwrap().total_irr, 8);
        assert_eq!(enumerate_special_wd(&space(Family::GL, 3, 2)).unwrap().total_irr, 6);
        let e = enumerate_special_wd(&space(Family::SL, 2, 3)).unwrap();
        assert_eq!(e.total_irr, 7);
        assert_eq!(e.classes.len(), 5);
        assert_eq!(enumerate_special_wd(&space(Family::Torus, 1, 3)).unwrap().classes.len(), 2);
    }

    #[test]
    fn sl2_extended_groups() {
        let s = space(Family::SL, 2, 3);
        let half = TorsionPoint::new(vec![1], 2, 3).unwrap();
        let levi = s.inertial_data(&half).levi;
        let zero = NilpotentOrbitLabel::zero(&levi).unwrap();
        let ext = extended_group(&s, &half, &zero).unwrap();
        assert_eq!(ext.frobenius.len(), 2);
        assert_ne!(ext.frobenius[0], ext.frobenius[1]);
        let quarter = TorsionPoint::new(vec![1], 4, 3).unwrap();
        let ext = extended_group(&s, &quarter, &zero).unwrap();
        assert_eq!(ext.base.order(), 1);
        assert_eq!(a_group(&s, &half, &zero).unwrap().label(), "Z/2");
    }

    #[test]
    fn split_zero_point_has_trivial_action() {
        let s = space(Family::Sp, 4, 3);
        let z = TorsionPoint::zero(2, 3);
        let levi = s.inertial_data(&z).levi;
        for l in enumerate_orbits(&levi).unwrap() {
            assert!(extended_group(&s, &z, &l).unwrap().is_trivial_action());
        }
    }
}
