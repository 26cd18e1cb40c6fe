//! Weyl groups as integer matrices and conjugacy on the Frobenius coset.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::root_datum::BasedRootDatum;

pub const DEFAULT_WEYL_BOUND: usize = 1_000_000;

#[derive(Debug, Clone)]
pub struct WeylGroup {
    elements: Vec<Matrix>,
    words: Vec<Vec<usize>>,
    index: HashMap<Matrix, usize>,
    generators: Vec<usize>,
    inverses: Vec<usize>,
}

/// Generate `W` on the character lattice of `datum` by breadth-first search,
/// so every stored word is reduced.
pub fn generate(datum: &BasedRootDatum, bound: usize) -> Result<WeylGroup> {
    let gens: Vec<Matrix> = datum.simples.iter().map(|&i| datum.reflection_matrix(i)).collect();
    WeylGroup::from_generators(datum.rank, gens, bound)
}

impl WeylGroup {
    pub fn from_generators(rank: usize, gens: Vec<Matrix>, bound: usize) -> Result<Self> {
        let id = Matrix::identity(rank);
        let mut elements = vec![id.clone()];
        let mut words = vec![vec![]];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut head = 0;
        while head < elements.len() {
            for (g, s) in gens.iter().enumerate() {
                let m = s.mul(&elements[head]);
                if !index.contains_key(&m) {
                    if elements.len() >= bound {
                        return Err(Error::BoundExceeded { what: "Weyl group order", bound: bound as u64, size: elements.len() as u64 + 1 });
                    }
                    let mut w = vec![g];
                    w.extend_from_slice(&words[head]);
                    index.insert(m.clone(), elements.len());
                    elements.push(m);
                    words.push(w);
                }
            }
            head += 1;
        }
        let generators = gens.iter().map(|s| index[s]).collect();
        let mut group = WeylGroup { elements, words, index, generators, inverses: vec![] };
        group.inverses = (0..group.elements.len())
            .map(|i| {
                let mut m = Matrix::identity(rank);
                for &g in group.words[i].iter().rev() {
                    m = m.mul(&gens[g]);
                }
                group.index[&m]
            })
            .collect();
        Ok(group)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn rank(&self) -> usize {
        self.elements[0].rows()
    }

    pub fn matrix(&self, w: usize) -> &Matrix {
        &self.elements[w]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.elements
    }

    /// Reduced word in the simple reflections (positions in the simple list).
    pub fn word(&self, w: usize) -> &[usize] {
        &self.words[w]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn index_of(&self, m: &Matrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].mul(&self.elements[b])]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// Same group acting on the dual lattice by inverse transposes; indices and words are kept.
    pub fn contragredient(&self) -> WeylGroup {
        let elements: Vec<Matrix> = (0..self.order()).map(|i| self.elements[self.inverses[i]].transpose()).collect();
        let index = elements.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        WeylGroup {
            elements,
            words: self.words.clone(),
            index,
            generators: self.generators.clone(),
            inverses: self.inverses.clone(),
        }
    }

    /// Subgroup generated by the given elements, as sorted indices.
    pub fn subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let mut out = vec![0usize];
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(g, x);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// An element `twist * w` of the Frobenius coset.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FrobeniusElement {
    pub weyl_part: usize,
    pub combined: Matrix,
}

#[derive(Debug, Clone, Serialize)]
pub struct TwistedClass {
    pub representative: FrobeniusElement,
    pub members: Vec<usize>,
}

impl TwistedClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// The coset `twist * W` inside the extended Weyl group, on one lattice.
#[derive(Debug, Clone)]
pub struct FrobeniusCoset {
    pub weyl: WeylGroup,
    pub twist: Matrix,
    twist_inv: Matrix,
    /// `twist^-1 s twist` for each generator.
    conj_gens: Vec<usize>,
}

impl FrobeniusCoset {
    pub fn new(weyl: WeylGroup, twist: Matrix) -> Result<Self> {
        let twist_inv = twist.inverse().ok_or_else(|| Error::TwistMismatch("twist not invertible".into()))?;
        let mut conj_gens = Vec::new();
        for &s in weyl.generators() {
            let m = twist_inv.mul(weyl.matrix(s)).mul(&twist);
            let idx = weyl.index_of(&m).ok_or_else(|| Error::TwistMismatch("twist does not normalize W".into()))?;
            conj_gens.push(idx);
        }
        Ok(FrobeniusCoset { weyl, twist, twist_inv, conj_gens })
    }

    pub fn element(&self, w: usize) -> FrobeniusElement {
        FrobeniusElement { weyl_part: w, combined: self.twist.mul(self.weyl.matrix(w)) }
    }

    /// Locate a combined matrix in the coset.
    pub fn find(&self, combined: &Matrix) -> Option<FrobeniusElement> {
        let w = self.weyl.index_of(&self.twist_inv.mul(combined))?;
        Some(self.element(w))
    }

    /// `u x u^-1`.
    pub fn conjugate(&self, u: usize, x: usize) -> usize {
        let m = self.weyl.matrix(u).mul(&self.twist).mul(self.weyl.matrix(x)).mul(self.weyl.matrix(self.weyl.inverse(u)));
        self.weyl.index_of(&self.twist_inv.mul(&m)).expect("twist normalizes W")
    }

    fn conjugate_by_generator(&self, g: usize, x: usize) -> usize {
        let s = self.weyl.generators()[g];
        self.weyl.mul(self.weyl.mul(self.conj_gens[g], x), s)
    }

    pub fn twisted_classes(&self) -> Vec<TwistedClass> {
        let n = self.weyl.order();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut members = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for g in 0..self.conj_gens.len() {
                    let y = self.conjugate_by_generator(g, x);
                    if !seen[y] {
                        seen[y] = true;
                        members.push(y);
                        queue.push_back(y);
                    }
                }
            }
            members.sort_unstable();
            let rep = members.iter().map(|&w| self.element(w)).min_by(|a, b| a.combined.cmp(&b.combined)).expect("nonempty");
            classes.push(TwistedClass { representative: rep, members });
        }
        classes.sort_by(|a, b| a.representative.combined.cmp(&b.representative.combined));
        classes
    }

    /// `{u in W : u x = x u}`.
    pub fn centralizer(&self, x: &FrobeniusElement) -> Vec<usize> {
        (0..self.weyl.order())
            .filter(|&u| {
                let m = self.weyl.matrix(u);
                m.mul(&x.combined) == x.combined.mul(m)
            })
            .collect()
    }
}

pub fn twisted_classes(coset: &FrobeniusCoset) -> Vec<TwistedClass> {
    coset.twisted_classes()
}

pub fn coset_centralizer(coset: &FrobeniusCoset, x: &FrobeniusElement) -> Vec<usize> {
    coset.centralizer(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_datum::{standard_datum, Family};

    fn split(f: Family, n: usize) -> FrobeniusCoset {
        let d = standard_datum(f, n).unwrap();
        let w = generate(&d, DEFAULT_WEYL_BOUND).unwrap();
        FrobeniusCoset::new(w, Matrix::identity(d.rank)).unwrap()
    }

    #[test]
    fn orders() {
        let o = |f, n| generate(&standard_datum(f, n).unwrap(), DEFAULT_WEYL_BOUND).unwrap().order();
        assert_eq!(o(Family::GL, 2), 2);
        assert_eq!(o(Family::Sp, 4), 8);
        assert_eq!(o(Family::Torus, 3), 1);
        assert_eq!(o(Family::GL, 4), 24);
        assert_eq!(o(Family::SO, 7), 48);
        assert_eq!(o(Family::SO, 8), 192);
        assert_eq!(o(Family::SL, 4), 24);
    }

    #[test]
    fn bound_is_enforced() {
        let d = standard_datum(Family::GL, 4).unwrap();
        assert!(matches!(generate(&d, 10), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn words_are_reduced_and_consistent() {
        let d = standard_datum(Family::Sp, 4).unwrap();
        let w = generate(&d, DEFAULT_WEYL_BOUND).unwrap();
        let longest = (0..w.order()).map(|i| w.word(i).len()).max().unwrap();
        assert_eq!(longest, 4);
        for i in 0..w.order() {
            let mut m = Matrix::identity(2);
            for &g in w.word(i) {
                m = m.mul(&d.reflection_matrix(d.simples[g]));
            }
            assert_eq!(&m, w.matrix(i));
            assert_eq!(w.mul(i, w.inverse(i)), 0);
        }
    }

    #[test]
    fn class_counts() {
        assert_eq!(split(Family::GL, 2).twisted_classes().len(), 2);
        assert_eq!(split(Family::Sp, 4).twisted_classes().len(), 5);
        assert_eq!(split(Family::GL, 3).twisted_classes().len(), 3);
        assert_eq!(split(Family::SO, 5).twisted_classes().len(), 5);
        assert_eq!(split(Family::GL, 4).twisted_classes().len(), 5);
    }

    #[test]
    fn centralizers() {
        let c = split(Family::GL, 2);
        assert_eq!(c.centralizer(&c.element(0)).len(), 2);
        assert_eq!(c.centralizer(&c.element(1)).len(), 2);
        let c = split(Family::GL, 3);
        let t = c.weyl.generators()[0];
        let cent = c.centralizer(&c.element(t));
        assert_eq!(cent.len(), 2);
        assert!(cent.contains(&t));
    }

    #[test]
    fn unitary_twist_classes() {
        // -w0 on GL3 gives the unitary coset; its classes biject with those of S3
        let d = standard_datum(Family::GL, 3).unwrap();
        let w = generate(&d, DEFAULT_WEYL_BOUND).unwrap();
        let tw = Matrix::from_rows(&[vec![0, 0, -1], vec![0, -1, 0], vec![-1, 0, 0]]);
        let c = FrobeniusCoset::new(w, tw).unwrap();
        let classes = c.twisted_classes();
        assert_eq!(classes.len(), 3);
        assert_eq!(classes.iter().map(|k| k.size()).sum::<usize>(), 6);
    }
}
