//! Centralizers of torsion points of the dual torus: the pseudo-Levi root
//! subsystem `R_v`, the stabilizer `W_v`, and `pi_0 = W_v / W(R_v)`.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::finite_torus::TorsionPoint;
use crate::group::FiniteGroup;
use crate::matrix::{dot, solve_in_span, vec_neg, vec_scale, vec_sub, Matrix};
use crate::root_datum::BasedRootDatum;
use crate::snf::smith;
use crate::weyl::WeylGroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factor {
    pub kind: CartanType,
    pub rank: usize,
    /// Simple roots (indices into the datum) in Dynkin order: for B and C the
    /// last node carries the double bond, for D the last two are the fork leaves.
    pub nodes: Vec<usize>,
    pub roots: Vec<usize>,
}

impl Factor {
    pub fn name(&self) -> String {
        format!("{}{}", self.kind, self.rank)
    }

    pub fn is_classical(&self) -> bool {
        matches!(self.kind, CartanType::A | CartanType::B | CartanType::C | CartanType::D)
            && !(self.kind == CartanType::D && self.rank < 4)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PseudoLevi {
    pub sub_roots: Vec<usize>,
    pub sub_simples: Vec<usize>,
    pub factors: Vec<Factor>,
    pub type_label: String,
}

impl PseudoLevi {
    pub fn is_empty(&self) -> bool {
        self.sub_roots.is_empty()
    }
}

/// Lexicographic positivity, i.e. positivity for a functional with rapidly
/// decreasing weights.
pub fn lex_positive(v: &[i64]) -> bool {
    v.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0)
}

/// The root subsystem of `datum` on the given root indices (assumed closed).
pub fn subsystem(datum: &BasedRootDatum, mut roots: Vec<usize>) -> PseudoLevi {
    roots.sort_unstable();
    let positive: Vec<usize> = roots.iter().copied().filter(|&i| lex_positive(&datum.roots[i])).collect();
    let pos_set: BTreeSet<&Vec<i64>> = positive.iter().map(|&i| &datum.roots[i]).collect();
    let simples: Vec<usize> = positive
        .iter()
        .copied()
        .filter(|&i| !positive.iter().any(|&j| j != i && pos_set.contains(&vec_sub(&datum.roots[i], &datum.roots[j]))))
        .collect();
    // components of the Dynkin graph
    let a = |i: usize, j: usize| dot(&datum.roots[i], &datum.coroots[j]);
    let mut comp = vec![usize::MAX; simples.len()];
    let mut ncomp = 0;
    for s in 0..simples.len() {
        if comp[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        comp[s] = ncomp;
        while let Some(x) = stack.pop() {
            for y in 0..simples.len() {
                if comp[y] == usize::MAX && a(simples[x], simples[y]) != 0 {
                    comp[y] = ncomp;
                    stack.push(y);
                }
            }
        }
        ncomp += 1;
    }
    let mut factors = Vec::new();
    for c in 0..ncomp {
        let nodes: Vec<usize> = (0..simples.len()).filter(|&s| comp[s] == c).map(|s| simples[s]).collect();
        let basis: Vec<Vec<i64>> = nodes.iter().map(|&i| datum.roots[i].clone()).collect();
        let members: Vec<usize> = roots.iter().copied().filter(|&r| solve_in_span(&basis, &datum.roots[r]).is_some()).collect();
        factors.push(classify(datum, nodes, members));
    }
    factors.sort_by(|x, y| (x.kind, x.rank, x.nodes.iter().min()).cmp(&(y.kind, y.rank, y.nodes.iter().min())));
    let type_label = if factors.is_empty() {
        "T".to_string()
    } else {
        factors.iter().map(|f| f.name()).collect::<Vec<_>>().join("x")
    };
    PseudoLevi { sub_roots: roots, sub_simples: simples, factors, type_label }
}

/// Index of the lattice spanned by `vectors` in its saturation.
fn saturation_index(vectors: &[Vec<i64>]) -> i64 {
    if vectors.is_empty() {
        return 1;
    }
    let m = Matrix::from_rows(vectors).transpose();
    smith(&m).expect("small matrix").diagonal.iter().filter(|&&d| d != 0).product()
}

fn classify(datum: &BasedRootDatum, nodes: Vec<usize>, roots: Vec<usize>) -> Factor {
    let k = nodes.len();
    let a = |i: usize, j: usize| dot(&datum.roots[nodes[i]], &datum.coroots[nodes[j]]);
    let bond = |i: usize, j: usize| a(i, j) * a(j, i);
    let nbrs: Vec<Vec<usize>> = (0..k).map(|i| (0..k).filter(|&j| j != i && a(i, j) != 0).collect()).collect();
    let make = |kind, order: Vec<usize>| Factor { kind, rank: k, nodes: order.iter().map(|&i| nodes[i]).collect(), roots: roots.clone() };
    if k == 1 {
        return make(CartanType::A, vec![0]);
    }
    let walk = |start: usize, avoid: Option<usize>| -> Vec<usize> {
        let mut path = vec![start];
        let mut prev = avoid;
        let mut cur = start;
        loop {
            let next = nbrs[cur].iter().copied().find(|&n| Some(n) != prev && !path.contains(&n));
            match next {
                Some(n) => {
                    prev = Some(cur);
                    cur = n;
                    path.push(n);
                }
                None => return path,
            }
        }
    };
    if let Some(branch) = (0..k).find(|&i| nbrs[i].len() == 3) {
        let mut arms: Vec<Vec<usize>> = nbrs[branch].iter().map(|&n| walk(n, Some(branch))).collect();
        arms.sort_by_key(|arm| (arm.len(), nodes[arm[0]]));
        let lens: Vec<usize> = arms.iter().map(|a| a.len()).collect();
        return match lens.as_slice() {
            [1, 1, _] => {
                let mut order: Vec<usize> = arms[2].iter().rev().copied().collect();
                order.push(branch);
                order.push(arms[0][0]);
                order.push(arms[1][0]);
                make(CartanType::D, order)
            }
            _ => make(CartanType::E, (0..k).collect()),
        };
    }
    let ends: Vec<usize> = (0..k).filter(|&i| nbrs[i].len() == 1).collect();
    let doubles: Vec<(usize, usize)> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).filter(|&(i, j)| bond(i, j) == 2).collect();
    if (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).any(|(i, j)| bond(i, j) == 3) {
        return make(CartanType::G, (0..k).collect());
    }
    if doubles.is_empty() {
        let start = *ends.iter().min_by_key(|&&e| nodes[e]).expect("path has ends");
        return make(CartanType::A, walk(start, None));
    }
    let (x, y) = doubles[0];
    let x_end = nbrs[x].len() == 1;
    let y_end = nbrs[y].len() == 1;
    if k > 2 && !x_end && !y_end {
        return make(CartanType::F, (0..k).collect());
    }
    // orient the path so the double bond is at the far end
    let last = if k == 2 {
        if datum.roots[nodes[x]] < datum.roots[nodes[y]] { y } else { x }
    } else if x_end {
        x
    } else {
        y
    };
    let first = if k == 2 { if last == x { y } else { x } } else { *ends.iter().find(|&&e| e != last).expect("two ends") };
    let order = walk(first, None);
    let (p, l) = (order[k - 2], order[k - 1]);
    let last_short = a(p, l) == -2;
    let kind = if k == 2 {
        let vecs: Vec<Vec<i64>> = nodes.iter().map(|&i| datum.roots[i].clone()).collect();
        if saturation_index(&vecs) == 1 { CartanType::B } else { CartanType::C }
    } else if last_short {
        CartanType::B
    } else {
        CartanType::C
    };
    // B: last node short, C: last node long
    let want_last_short = kind == CartanType::B;
    let order = if last_short == want_last_short { order } else { order.into_iter().rev().collect() };
    make(kind, order)
}

/// `R_v`: roots of `dual` pairing integrally with `v`.
pub fn centralizer_roots(dual: &BasedRootDatum, v: &TorsionPoint) -> PseudoLevi {
    let roots = (0..dual.num_roots()).filter(|&i| v.pairs_integrally(&dual.roots[i])).collect();
    subsystem(dual, roots)
}

/// Reflection in root `i` of `dual`, acting on the cocharacter lattice.
pub fn coreflection_matrix(dual: &BasedRootDatum, i: usize) -> Matrix {
    let n = dual.rank;
    let mut m = Matrix::identity(n);
    for r in 0..n {
        for c in 0..n {
            m[(r, c)] -= dual.coroots[i][r] * dual.roots[i][c];
        }
    }
    m
}

/// `W_v = {w : w v = v mod L}` for `W` acting on `L`.
pub fn weyl_stabilizer(w: &WeylGroup, v: &TorsionPoint) -> Vec<usize> {
    (0..w.order()).filter(|&i| v.apply(w.matrix(i)) == *v).collect()
}

/// `W(R)` inside `W` acting on the cocharacter lattice of `dual`.
pub fn reflection_subgroup(w: &WeylGroup, dual: &BasedRootDatum, levi: &PseudoLevi) -> Vec<usize> {
    let gens: Vec<usize> = levi
        .sub_simples
        .iter()
        .map(|&i| w.index_of(&coreflection_matrix(dual, i)).expect("reflection lies in W"))
        .collect();
    w.subgroup(&gens)
}

/// Cosets of a normal subgroup `n` inside a subgroup `h` of `W`.
#[derive(Debug, Clone)]
pub struct CosetGroup {
    pub reps: Vec<usize>,
    pub group: FiniteGroup,
    normal: Vec<usize>,
}

impl CosetGroup {
    pub fn new(w: &WeylGroup, h: &[usize], normal: &[usize]) -> Self {
        let canon = |x: usize| normal.iter().map(|&k| w.mul(x, k)).min().expect("nonempty");
        let mut reps: Vec<usize> = h.iter().map(|&x| canon(x)).collect::<BTreeSet<_>>().into_iter().collect();
        // identity coset first
        let id = canon(0);
        reps.retain(|&r| r != id);
        reps.insert(0, id);
        let pos = |r: usize| reps.iter().position(|&x| x == r).expect("closed");
        let table = reps.iter().map(|&a| reps.iter().map(|&b| pos(canon(w.mul(a, b)))).collect()).collect();
        CosetGroup { group: FiniteGroup::from_table(table), reps: reps.clone(), normal: normal.to_vec() }
    }

    /// Position of the coset containing `x`.
    pub fn locate(&self, w: &WeylGroup, x: usize) -> Option<usize> {
        let r = self.normal.iter().map(|&k| w.mul(x, k)).min()?;
        self.reps.iter().position(|&y| y == r)
    }

    pub fn order(&self) -> usize {
        self.reps.len()
    }
}

#[derive(Debug, Clone)]
pub struct ComponentGroupPresentation {
    pub coset_reps: Vec<usize>,
    pub group: FiniteGroup,
    pub frobenius: Option<usize>,
}

impl ComponentGroupPresentation {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn label(&self) -> String {
        if self.order() <= 16 {
            self.group.label()
        } else {
            format!("order {}", self.order())
        }
    }
}

/// `pi_0(Z(s)) = W_v / W(R_v)`.
pub fn pi0_centralizer(w: &WeylGroup, dual: &BasedRootDatum, v: &TorsionPoint, levi: &PseudoLevi) -> ComponentGroupPresentation {
    let stab = weyl_stabilizer(w, v);
    let refl = reflection_subgroup(w, dual, levi);
    let c = CosetGroup::new(w, &stab, &refl);
    ComponentGroupPresentation { coset_reps: c.reps, group: c.group, frobenius: None }
}

/// How a lattice automorphism permutes the factors of a pseudo-Levi.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorMap {
    pub target: Vec<usize>,
    /// `nodes[i][k]` is the node of factor `target[i]` hit by node `k` of factor `i`.
    pub nodes: Vec<Vec<usize>>,
}

impl FactorMap {
    /// Whether the induced diagram map on factor `i` swaps the two fork leaves of a D factor.
    pub fn swaps_fork(&self, levi: &PseudoLevi, i: usize) -> bool {
        let f = &levi.factors[i];
        f.kind == CartanType::D && self.nodes[i][f.rank - 1] == f.rank - 2
    }

    pub fn is_identity(&self) -> bool {
        self.target.iter().enumerate().all(|(i, &t)| t == i) && self.nodes.iter().all(|p| p.iter().enumerate().all(|(k, &x)| x == k))
    }
}

/// The permutation of factors and Dynkin nodes induced by `g`, which acts on
/// the character lattice of `dual` and must preserve `levi`.
pub fn factor_map(dual: &BasedRootDatum, levi: &PseudoLevi, g: &Matrix) -> Result<FactorMap> {
    let mut target = Vec::new();
    let mut nodes = Vec::new();
    for f in &levi.factors {
        let mut imgs: Vec<Vec<i64>> = f.nodes.iter().map(|&i| g.mul_vec(&dual.roots[i])).collect();
        let j = levi
            .factors
            .iter()
            .position(|h| h.roots.iter().any(|&r| dual.roots[r] == imgs[0]))
            .ok_or_else(|| Error::Incompatible("automorphism does not preserve the pseudo-Levi".into()))?;
        let h = &levi.factors[j];
        loop {
            let Some(neg) = imgs.iter().find(|x| !lex_positive(x)).cloned() else { break };
            let idx = dual.root_index(&neg).ok_or_else(|| Error::Incompatible("image is not a root".into()))?;
            let cor = dual.coroots[idx].clone();
            for x in imgs.iter_mut() {
                *x = vec_sub(x, &vec_scale(&neg, dot(x, &cor)));
            }
        }
        let perm = imgs
            .iter()
            .map(|x| h.nodes.iter().position(|&n| dual.roots[n] == *x))
            .collect::<Option<Vec<usize>>>()
            .ok_or_else(|| Error::Incompatible("automorphism does not preserve the pseudo-Levi".into()))?;
        if h.kind == CartanType::D && h.rank == 4 && perm[0] != 0 {
            return Err(Error::UnsupportedFactor("D4 with triality action".into()));
        }
        target.push(j);
        nodes.push(perm);
    }
    Ok(FactorMap { target, nodes })
}

/// A node of the extended Dynkin diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtendedNode {
    pub root: Vec<i64>,
    pub component: usize,
    pub affine: bool,
}

/// Simple roots plus the negative highest root of every irreducible component.
pub fn extended_diagram(datum: &BasedRootDatum) -> Vec<ExtendedNode> {
    let all: Vec<usize> = (0..datum.num_roots()).collect();
    let full = subsystem(datum, all);
    let pos = datum.positive_roots();
    let mut out = Vec::new();
    for (c, f) in full.factors.iter().enumerate() {
        for &i in datum.simples.iter().filter(|&&s| f.roots.contains(&s)) {
            out.push(ExtendedNode { root: datum.roots[i].clone(), component: c, affine: false });
        }
        let highest = pos
            .iter()
            .copied()
            .filter(|r| f.roots.contains(r))
            .max_by_key(|&r| datum.simple_coordinates(r).iter().sum::<i64>())
            .expect("component has positive roots");
        out.push(ExtendedNode { root: vec_neg(&datum.roots[highest]), component: c, affine: true });
    }
    out
}

/// Subsets of the extended diagram omitting at least one node per component.
pub fn extended_subsets(datum: &BasedRootDatum) -> Vec<Vec<Vec<i64>>> {
    let nodes = extended_diagram(datum);
    let ncomp = nodes.iter().map(|n| n.component + 1).max().unwrap_or(0);
    let mut out = Vec::new();
    for mask in 0u32..(1 << nodes.len()) {
        let proper = (0..ncomp).all(|c| nodes.iter().enumerate().any(|(k, n)| n.component == c && mask & (1 << k) == 0));
        if proper {
            out.push(nodes.iter().enumerate().filter(|(k, _)| mask & (1 << k) != 0).map(|(_, n)| n.root.clone()).collect());
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CenterTorsionWitness {
    /// Elementary divisors of `(X / Z I)_tor`.
    pub source: Vec<i64>,
    /// Elementary divisors of `(X / Z Delta)_tor`.
    pub target: Vec<i64>,
    pub injective: bool,
}

fn torsion(rank: usize, vectors: &[Vec<i64>]) -> Result<Vec<i64>> {
    if vectors.is_empty() {
        return Ok(vec![]);
    }
    let m = Matrix::from_rows(vectors).transpose();
    debug_assert_eq!(m.rows(), rank);
    Ok(smith(&m)?.diagonal.into_iter().filter(|&d| d > 1).collect())
}

/// Torsion of `X/ZI` and `X/ZDelta` on the character lattice of `datum`, and
/// injectivity of the natural map between them.
pub fn center_torsion_surjection_check(datum: &BasedRootDatum, subset: &[Vec<i64>]) -> Result<CenterTorsionWitness> {
    let delta: Vec<Vec<i64>> = datum.simples.iter().map(|&i| datum.roots[i].clone()).collect();
    let source = torsion(datum.rank, subset)?;
    let target = torsion(datum.rank, &delta)?;
    // the kernel is the torsion of Z Delta / Z I
    let coords = subset
        .iter()
        .map(|s| {
            solve_in_span(&delta, s)
                .filter(|c| c.iter().all(|x| x.is_integer()))
                .map(|c| c.iter().map(|x| *x.numer() as i64).collect::<Vec<i64>>())
                .ok_or_else(|| Error::InvalidArgument("subset is not in the root lattice".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let injective = torsion(delta.len(), &coords)?.is_empty();
    Ok(CenterTorsionWitness { source, target, injective })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_datum::{standard_datum, Family};
    use crate::weyl::generate;

    fn dual_weyl(d: &BasedRootDatum) -> WeylGroup {
        generate(d, 1000).unwrap().contragredient()
    }

    #[test]
    fn full_and_empty() {
        let pgl = standard_datum(Family::PGL, 2).unwrap();
        let zero = TorsionPoint::zero(1, 3);
        assert_eq!(centralizer_roots(&pgl, &zero).sub_roots.len(), 2);
        let half = TorsionPoint::new(vec![1], 2, 3).unwrap();
        assert!(centralizer_roots(&pgl, &half).is_empty());
        let gl = standard_datum(Family::GL, 2).unwrap();
        let v = TorsionPoint::new(vec![1, 0], 2, 3).unwrap();
        assert!(centralizer_roots(&gl, &v).is_empty());
    }

    #[test]
    fn type_labels() {
        let label = |f, n| centralizer_roots(&standard_datum(f, n).unwrap(), &TorsionPoint::zero(standard_datum(f, n).unwrap().rank, 3)).type_label;
        assert_eq!(label(Family::GL, 3), "A2");
        assert_eq!(label(Family::SO, 5), "B2");
        assert_eq!(label(Family::Sp, 4), "C2");
        assert_eq!(label(Family::Sp, 6), "C3");
        assert_eq!(label(Family::SO, 7), "B3");
        assert_eq!(label(Family::SO, 8), "D4");
        assert_eq!(label(Family::SO, 10), "D5");
        assert_eq!(label(Family::SO, 4), "A1xA1");
        assert_eq!(label(Family::Torus, 2), "T");
    }

    #[test]
    fn dynkin_orders() {
        let d = standard_datum(Family::SO, 7).unwrap();
        let l = centralizer_roots(&d, &TorsionPoint::zero(3, 3));
        let f = &l.factors[0];
        assert_eq!(d.roots[f.nodes[2]], vec![0, 0, 1]);
        let d = standard_datum(Family::Sp, 6).unwrap();
        let l = centralizer_roots(&d, &TorsionPoint::zero(3, 3));
        assert_eq!(d.roots[l.factors[0].nodes[2]], vec![0, 0, 2]);
        let d = standard_datum(Family::SO, 10).unwrap();
        let l = centralizer_roots(&d, &TorsionPoint::zero(5, 3));
        let f = &l.factors[0];
        let mut leaves = vec![d.roots[f.nodes[3]].clone(), d.roots[f.nodes[4]].clone()];
        leaves.sort();
        assert_eq!(leaves, vec![vec![0, 0, 0, 1, -1], vec![0, 0, 0, 1, 1]]);
    }

    #[test]
    fn pseudo_levi_of_so5() {
        // (1/2,1/2) on SO5 leaves the long roots: A1xA1
        let d = standard_datum(Family::SO, 5).unwrap();
        let v = TorsionPoint::new(vec![1, 1], 2, 3).unwrap();
        let l = centralizer_roots(&d, &v);
        assert_eq!(l.type_label, "A1xA1");
        let w = dual_weyl(&d);
        let pi0 = pi0_centralizer(&w, &d, &v, &l);
        assert_eq!(pi0.order(), 2);
        // (1/2, 0): only the short roots ±e2 pair integrally
        let v = TorsionPoint::new(vec![1, 0], 2, 3).unwrap();
        let l = centralizer_roots(&d, &v);
        assert_eq!(l.sub_roots.len(), 2);
    }

    #[test]
    fn stabilizers() {
        let gl = standard_datum(Family::GL, 2).unwrap();
        let w = dual_weyl(&gl);
        assert_eq!(weyl_stabilizer(&w, &TorsionPoint::zero(2, 3)).len(), 2);
        assert_eq!(weyl_stabilizer(&w, &TorsionPoint::new(vec![1, 0], 2, 3).unwrap()).len(), 1);
        assert_eq!(weyl_stabilizer(&w, &TorsionPoint::new(vec![1, 1], 2, 3).unwrap()).len(), 2);
    }

    #[test]
    fn pi0_examples() {
        let pgl = standard_datum(Family::PGL, 2).unwrap();
        let w = dual_weyl(&pgl);
        for (num, den, want) in [(0, 1, 1), (1, 2, 2), (1, 4, 1)] {
            let v = TorsionPoint::new(vec![num], den, 3).unwrap();
            let l = centralizer_roots(&pgl, &v);
            assert_eq!(pi0_centralizer(&w, &pgl, &v, &l).order(), want, "{v}");
        }
    }

    #[test]
    fn torsion_examples() {
        let sl = standard_datum(Family::SL, 2).unwrap();
        let delta = vec![sl.roots[sl.simples[0]].clone()];
        let full = center_torsion_surjection_check(&sl, &delta).unwrap();
        assert_eq!((full.source.clone(), full.target.clone(), full.injective), (vec![2], vec![2], true));
        let empty = center_torsion_surjection_check(&sl, &[]).unwrap();
        assert_eq!((empty.source, empty.target, empty.injective), (vec![], vec![2], true));
    }

    #[test]
    fn extended_nodes() {
        let d = standard_datum(Family::Sp, 4).unwrap();
        let nodes = extended_diagram(&d);
        assert_eq!(nodes.len(), 3);
        assert_eq!(nodes.iter().find(|n| n.affine).unwrap().root, vec![-2, 0]);
        assert_eq!(extended_subsets(&d).len(), 7);
        let d = standard_datum(Family::SO, 4).unwrap();
        assert_eq!(extended_diagram(&d).len(), 4);
        assert_eq!(extended_subsets(&d).len(), 9);
    }

    #[test]
    fn factor_maps() {
        let d = standard_datum(Family::SO, 4).unwrap();
        let l = centralizer_roots(&d, &TorsionPoint::zero(2, 3));
        let flip = Matrix::from_rows(&[vec![1, 0], vec![0, -1]]);
        let m = factor_map(&d, &l, &flip).unwrap();
        assert_eq!(m.target, vec![1, 0]);
        let id = factor_map(&d, &l, &Matrix::identity(2)).unwrap();
        assert!(id.is_identity());
        let d = standard_datum(Family::SO, 10).unwrap();
        let l = centralizer_roots(&d, &TorsionPoint::zero(5, 3));
        let mut flip = Matrix::identity(5);
        flip[(4, 4)] = -1;
        let m = factor_map(&d, &l, &flip).unwrap();
        assert!(m.swaps_fork(&l, 0));
        // a Weyl element acts by an inner diagram map
        let s = d.reflection_matrix(d.simples[4]);
        let m = factor_map(&d, &l, &s).unwrap();
        assert!(m.is_identity());
    }
}
