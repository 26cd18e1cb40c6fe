//! Based root data, Galois twists and the dual datum.
//!
//! Both lattices are `Z^rank` and the pairing is the dot product, so the
//! isogeny type lives entirely in the root and coroot vectors.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Axiom, Error, Result};
use crate::matrix::{dot, solve_in_span, vec_neg, vec_scale, vec_sub, Matrix};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BasedRootDatum {
    pub rank: usize,
    pub roots: Vec<Vec<i64>>,
    pub coroots: Vec<Vec<i64>>,
    pub simples: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    GL,
    SL,
    PGL,
    Sp,
    SO,
    Torus,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::GL => "GL",
            Family::SL => "SL",
            Family::PGL => "PGL",
            Family::Sp => "Sp",
            Family::SO => "SO",
            Family::Torus => "T",
        };
        f.write_str(s)
    }
}

impl Family {
    /// Parse names like `GL2`, `Sp4`, `SO5`, `T1`.
    pub fn parse_spec(s: &str) -> Result<(Family, usize)> {
        let split = s.find(|c: char| c.is_ascii_digit()).ok_or_else(|| bad_spec(s))?;
        let (name, num) = s.split_at(split);
        let n: usize = num.parse().map_err(|_| bad_spec(s))?;
        let family = match name.to_ascii_uppercase().as_str() {
            "GL" => Family::GL,
            "SL" => Family::SL,
            "PGL" => Family::PGL,
            "SP" => Family::Sp,
            "SO" => Family::SO,
            "T" | "TORUS" => Family::Torus,
            _ => return Err(bad_spec(s)),
        };
        Ok((family, n))
    }
}

fn bad_spec(s: &str) -> Error {
    Error::InvalidArgument(format!("unrecognized group `{s}`"))
}

const MAX_MATRIX_SIZE: usize = 16;

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn type_a_roots(n: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a != b {
                out.push(vec_sub(&unit(n, a), &unit(n, b)));
            }
        }
    }
    out
}

/// Roots and coroots in `Z^m` for types B, C, D.
fn classical_roots(m: usize, long_short: Option<bool>) -> (Vec<Vec<i64>>, Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let mut roots = Vec::new();
    let mut coroots = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            for (si, sj) in [(1, -1), (-1, 1), (1, 1), (-1, -1)] {
                let mut v = vec![0; m];
                v[i] = si;
                v[j] = sj;
                roots.push(v.clone());
                coroots.push(v);
            }
        }
    }
    let mut simple_vecs: Vec<Vec<i64>> = (0..m.saturating_sub(1)).map(|i| vec_sub(&unit(m, i), &unit(m, i + 1))).collect();
    match long_short {
        // type B: short roots e_i with coroots 2e_i
        Some(true) => {
            for i in 0..m {
                for s in [1, -1] {
                    roots.push(vec_scale(&unit(m, i), s));
                    coroots.push(vec_scale(&unit(m, i), 2 * s));
                }
            }
            if m >= 1 {
                simple_vecs.push(unit(m, m - 1));
            }
        }
        // type C: long roots 2e_i with coroots e_i
        Some(false) => {
            for i in 0..m {
                for s in [1, -1] {
                    roots.push(vec_scale(&unit(m, i), 2 * s));
                    coroots.push(vec_scale(&unit(m, i), s));
                }
            }
            if m >= 1 {
                simple_vecs.push(vec_scale(&unit(m, m - 1), 2));
            }
        }
        None => {
            if m >= 2 {
                let mut v = vec![0; m];
                v[m - 2] = 1;
                v[m - 1] = 1;
                simple_vecs.push(v);
            } else {
                simple_vecs.clear();
            }
        }
    }
    (roots, coroots, simple_vecs)
}

fn assemble(rank: usize, roots: Vec<Vec<i64>>, coroots: Vec<Vec<i64>>, simple_vecs: &[Vec<i64>]) -> BasedRootDatum {
    let simples = simple_vecs.iter().map(|s| roots.iter().position(|r| r == s).expect("simple root present")).collect();
    BasedRootDatum { rank, roots, coroots, simples }
}

/// The standard based root datum of a classical group.
pub fn standard_datum(family: Family, n: usize) -> Result<BasedRootDatum> {
    let unsupported = || Error::UnsupportedFamily { family: family.to_string(), n };
    if n == 0 || n > MAX_MATRIX_SIZE {
        return Err(unsupported());
    }
    let datum = match family {
        Family::Torus => BasedRootDatum { rank: n, roots: vec![], coroots: vec![], simples: vec![] },
        Family::GL => {
            let roots = type_a_roots(n);
            let simple_vecs: Vec<_> = (0..n - 1).map(|i| vec_sub(&unit(n, i), &unit(n, i + 1))).collect();
            assemble(n, roots.clone(), roots, &simple_vecs)
        }
        Family::SL | Family::PGL => {
            if n < 2 {
                return Err(unsupported());
            }
            let gl = standard_datum(Family::GL, n)?;
            let simple_roots: Vec<Vec<i64>> = gl.simples.iter().map(|&i| gl.roots[i].clone()).collect();
            let in_simple_basis = |v: &[i64]| -> Vec<i64> {
                solve_in_span(&simple_roots, v)
                    .expect("root in span")
                    .iter()
                    .map(|c| *c.numer() as i64)
                    .collect()
            };
            let pairings = |v: &[i64]| -> Vec<i64> { simple_roots.iter().map(|s| dot(v, s)).collect() };
            let (roots, coroots): (Vec<_>, Vec<_>) = if family == Family::SL {
                gl.roots.iter().map(|r| (pairings(r), in_simple_basis(r))).unzip()
            } else {
                gl.roots.iter().map(|r| (in_simple_basis(r), pairings(r))).unzip()
            };
            let simples = gl.simples.clone();
            BasedRootDatum { rank: n - 1, roots, coroots, simples }
        }
        Family::Sp => {
            if n % 2 != 0 {
                return Err(unsupported());
            }
            let m = n / 2;
            let (r, c, s) = classical_roots(m, Some(false));
            assemble(m, r, c, &s)
        }
        Family::SO => {
            let m = n / 2;
            if n < 2 {
                return Err(unsupported());
            }
            let (r, c, s) = classical_roots(m, if n % 2 == 1 { Some(true) } else { None });
            assemble(m, r, c, &s)
        }
    };
    datum.validate()?;
    Ok(datum)
}

impl BasedRootDatum {
    pub fn new(rank: usize, roots: Vec<Vec<i64>>, coroots: Vec<Vec<i64>>, simples: Vec<usize>) -> Result<Self> {
        let d = BasedRootDatum { rank, roots, coroots, simples };
        d.validate()?;
        Ok(d)
    }

    pub fn torus(rank: usize) -> Self {
        BasedRootDatum { rank, roots: vec![], coroots: vec![], simples: vec![] }
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn has_roots(&self) -> bool {
        !self.roots.is_empty()
    }

    pub fn root_index(&self, v: &[i64]) -> Option<usize> {
        self.roots.iter().position(|r| r == v)
    }

    pub fn coroot_index(&self, v: &[i64]) -> Option<usize> {
        self.coroots.iter().position(|r| r == v)
    }

    /// `s_i(x) = x - <x, a_i^v> a_i` on the character lattice.
    pub fn reflect(&self, i: usize, x: &[i64]) -> Vec<i64> {
        let c = dot(x, &self.coroots[i]);
        vec_sub(x, &vec_scale(&self.roots[i], c))
    }

    /// Dual reflection on the cocharacter lattice.
    pub fn coreflect(&self, i: usize, y: &[i64]) -> Vec<i64> {
        let c = dot(&self.roots[i], y);
        vec_sub(y, &vec_scale(&self.coroots[i], c))
    }

    /// Matrix of `s_i` on the character lattice.
    pub fn reflection_matrix(&self, i: usize) -> Matrix {
        let n = self.rank;
        let mut m = Matrix::identity(n);
        for r in 0..n {
            for c in 0..n {
                m[(r, c)] -= self.roots[i][r] * self.coroots[i][c];
            }
        }
        m
    }

    /// Cartan matrix `a_ij = <a_i, a_j^v>` on the simple roots.
    pub fn cartan(&self) -> Vec<Vec<i64>> {
        self.simples
            .iter()
            .map(|&i| self.simples.iter().map(|&j| dot(&self.roots[i], &self.coroots[j])).collect())
            .collect()
    }

    fn simple_vectors(&self) -> Vec<Vec<i64>> {
        self.simples.iter().map(|&i| self.roots[i].clone()).collect()
    }

    /// Coordinates of root `i` in the simple basis.
    pub fn simple_coordinates(&self, i: usize) -> Vec<i64> {
        let c = solve_in_span(&self.simple_vectors(), &self.roots[i]).expect("validated datum");
        c.iter().map(|x| *x.numer() as i64).collect()
    }

    pub fn is_positive(&self, i: usize) -> bool {
        self.simple_coordinates(i).iter().any(|&c| c > 0)
    }

    pub fn positive_roots(&self) -> Vec<usize> {
        (0..self.roots.len()).filter(|&i| self.is_positive(i)).collect()
    }

    /// Checks every axiom and reports the first failure.
    pub fn validate(&self) -> Result<()> {
        let shape = |index| Err(Error::Axiom { axiom: Axiom::Shape, index });
        if self.roots.len() != self.coroots.len() {
            return shape(self.roots.len().min(self.coroots.len()));
        }
        for (i, (r, c)) in self.roots.iter().zip(&self.coroots).enumerate() {
            if r.len() != self.rank || c.len() != self.rank {
                return shape(i);
            }
        }
        for (k, &s) in self.simples.iter().enumerate() {
            if s >= self.roots.len() || self.simples[..k].contains(&s) {
                return shape(s);
            }
        }
        let index: HashMap<&Vec<i64>, usize> = self.roots.iter().enumerate().map(|(i, r)| (r, i)).collect();
        for i in 0..self.roots.len() {
            if dot(&self.roots[i], &self.coroots[i]) != 2 {
                return Err(Error::Axiom { axiom: Axiom::Pairing, index: i });
            }
        }
        for (i, r) in self.roots.iter().enumerate() {
            if index[r] != i {
                return Err(Error::Axiom { axiom: Axiom::Distinct, index: i });
            }
        }
        for (i, r) in self.roots.iter().enumerate() {
            match index.get(&vec_neg(r)) {
                Some(&j) if self.coroots[j] == vec_neg(&self.coroots[i]) => {}
                _ => return Err(Error::Axiom { axiom: Axiom::Negation, index: i }),
            }
        }
        for (i, r) in self.roots.iter().enumerate() {
            if index.contains_key(&vec_scale(r, 2)) {
                return Err(Error::Axiom { axiom: Axiom::Reduced, index: i });
            }
        }
        for i in 0..self.roots.len() {
            for j in 0..self.roots.len() {
                let img = self.reflect(i, &self.roots[j]);
                let Some(&k) = index.get(&img) else {
                    return Err(Error::Axiom { axiom: Axiom::RootReflection, index: i });
                };
                if self.coreflect(i, &self.coroots[j]) != self.coroots[k] {
                    return Err(Error::Axiom { axiom: Axiom::CorootReflection, index: i });
                }
            }
        }
        if self.roots.is_empty() {
            return Ok(());
        }
        let simple_vecs = self.simple_vectors();
        if simple_vecs.is_empty() {
            return Err(Error::Axiom { axiom: Axiom::SimplePositivity, index: 0 });
        }
        for (k, s) in simple_vecs.iter().enumerate() {
            if solve_in_span(&simple_vecs[..k], s).is_some() {
                return Err(Error::Axiom { axiom: Axiom::SimplePositivity, index: self.simples[k] });
            }
        }
        for (i, r) in self.roots.iter().enumerate() {
            let ok = match solve_in_span(&simple_vecs, r) {
                Some(c) => {
                    let zero = Ratio::from_integer(0);
                    c.iter().all(|x| x.is_integer()) && (c.iter().all(|x| *x >= zero) || c.iter().all(|x| *x <= zero))
                }
                None => false,
            };
            if !ok {
                return Err(Error::Axiom { axiom: Axiom::SimplePositivity, index: i });
            }
        }
        Ok(())
    }

    /// Swap the lattices and roots with coroots.
    pub fn dualize(&self) -> BasedRootDatum {
        BasedRootDatum {
            rank: self.rank,
            roots: self.coroots.clone(),
            coroots: self.roots.clone(),
            simples: self.simples.clone(),
        }
    }

    /// Roots and coroots reordered by simple coordinates.
    fn canonical_pairs(&self) -> Vec<(Vec<i64>, Vec<i64>, Vec<i64>)> {
        let mut v: Vec<_> = (0..self.roots.len())
            .map(|i| (self.simple_coordinates(i), self.roots[i].clone(), self.coroots[i].clone()))
            .collect();
        v.sort();
        v
    }

    /// Isomorphism test through canonical root ordering.
    ///
    /// Tries the identity on lattices first, then, for semisimple data, the
    /// lattice maps determined by Cartan-preserving matchings of simple roots.
    pub fn is_isomorphic(&self, other: &BasedRootDatum) -> bool {
        if self.rank != other.rank || self.roots.len() != other.roots.len() || self.simples.len() != other.simples.len() {
            return false;
        }
        if self.canonical_pairs() == other.canonical_pairs() {
            return true;
        }
        if self.simples.len() != self.rank || self.rank > 6 {
            return false;
        }
        let (ca, cb) = (self.cartan(), other.cartan());
        let n = self.rank;
        let a = Matrix::from_rows(&self.simple_vectors()).transpose();
        let Some(a_inv) = a.rational_inverse() else { return false };
        for perm in permutations(n) {
            if (0..n).any(|i| (0..n).any(|j| ca[i][j] != cb[perm[i]][perm[j]])) {
                continue;
            }
            // g maps simple i of self to simple perm[i] of other
            let b = Matrix::from_rows(&perm.iter().map(|&p| other.roots[other.simples[p]].clone()).collect::<Vec<_>>()).transpose();
            let mut g = Matrix::zeros(n, n);
            let mut integral = true;
            for r in 0..n {
                for c in 0..n {
                    let x: Ratio<i128> = (0..n).map(|k| Ratio::from_integer(b[(r, k)] as i128) * a_inv[k][c]).sum();
                    if !x.is_integer() {
                        integral = false;
                    }
                    g[(r, c)] = x.to_integer() as i64;
                }
            }
            if !integral {
                continue;
            }
            let Some(gt) = g.contragredient() else { continue };
            let ok = (0..self.roots.len()).all(|i| {
                let img = g.mul_vec(&self.roots[i]);
                other.root_index(&img).is_some_and(|k| other.coroots[k] == gt.mul_vec(&self.coroots[i]))
            });
            if ok {
                return true;
            }
        }
        false
    }

    /// Parse the line-oriented text format; returns the datum and an optional twist matrix.
    pub fn parse_text(text: &str) -> Result<(BasedRootDatum, Option<Matrix>)> {
        let mut rank = None;
        let mut roots = Vec::new();
        let mut coroots = Vec::new();
        let mut simples = Vec::new();
        let mut twist = None;
        for (ln, raw) in text.lines().enumerate() {
            let line_no = ln + 1;
            let err = |msg: &str| Error::Parse { line: line_no, msg: msg.to_string() };
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(r) = line.strip_prefix("rank") {
                let r = r.trim().trim_start_matches('=').trim();
                rank = Some(r.parse::<usize>().map_err(|_| err("bad rank"))?);
                continue;
            }
            let n = rank.ok_or_else(|| err("rank must come first"))?;
            let mut toks = line.split_whitespace();
            match toks.next() {
                Some("root") => {
                    let r = parse_vector(toks.next().ok_or_else(|| err("missing root vector"))?).map_err(|m| err(&m))?;
                    if toks.next() != Some("coroot") {
                        return Err(err("expected `coroot`"));
                    }
                    let c = parse_vector(toks.next().ok_or_else(|| err("missing coroot vector"))?).map_err(|m| err(&m))?;
                    if r.len() != n || c.len() != n {
                        return Err(err("vector length differs from rank"));
                    }
                    match toks.next() {
                        None => {}
                        Some("simple") => simples.push(roots.len()),
                        Some(t) => return Err(err(&format!("unexpected token `{t}`"))),
                    }
                    roots.push(r);
                    coroots.push(c);
                }
                Some("twist") => {
                    let rest: Vec<&str> = toks.collect();
                    let entries = parse_vector(&rest.join(",")).map_err(|m| err(&m))?;
                    if entries.len() != n * n {
                        return Err(err("twist needs rank^2 entries"));
                    }
                    twist = Some(Matrix::from_flat(n, n, entries));
                }
                Some(t) => return Err(err(&format!("unknown record `{t}`"))),
                None => {}
            }
        }
        let rank = rank.ok_or(Error::Parse { line: 0, msg: "missing rank".into() })?;
        let d = BasedRootDatum::new(rank, roots, coroots, simples)?;
        Ok((d, twist))
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("rank={}\n", self.rank);
        for i in 0..self.roots.len() {
            let v = |x: &Vec<i64>| x.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
            s += &format!("root {} coroot {}", v(&self.roots[i]), v(&self.coroots[i]));
            if self.simples.contains(&i) {
                s += " simple";
            }
            s.push('\n');
        }
        s
    }
}

impl FromStr for BasedRootDatum {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(Self::parse_text(s)?.0)
    }
}

fn parse_vector(tok: &str) -> std::result::Result<Vec<i64>, String> {
    let cleaned: String = tok.chars().map(|c| if "()[]".contains(c) { ' ' } else { c }).collect();
    cleaned
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>().map_err(|_| format!("bad integer `{t}`")))
        .collect()
}

pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// The Frobenius action on the character lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GaloisTwist {
    pub matrix: Matrix,
    pub order: u32,
}

const MAX_TWIST_ORDER: u32 = 24;

impl GaloisTwist {
    pub fn trivial(rank: usize) -> Self {
        GaloisTwist { matrix: Matrix::identity(rank), order: 1 }
    }

    /// Accepts any finite-order lattice automorphism permuting roots and coroots.
    pub fn new(matrix: Matrix, datum: &BasedRootDatum) -> Result<Self> {
        let bad = |m: &str| Error::TwistMismatch(m.to_string());
        if !matrix.is_square() || matrix.rows() != datum.rank {
            return Err(bad("matrix size differs from rank"));
        }
        let order = matrix.order(MAX_TWIST_ORDER).ok_or_else(|| bad("matrix is not of finite order"))?;
        let contra = matrix.contragredient().ok_or_else(|| bad("matrix is not invertible over Z"))?;
        for i in 0..datum.roots.len() {
            let img = matrix.mul_vec(&datum.roots[i]);
            match datum.root_index(&img) {
                Some(k) if datum.coroots[k] == contra.mul_vec(&datum.coroots[i]) => {}
                _ => return Err(bad(&format!("root {i} is not mapped to a root"))),
            }
        }
        Ok(GaloisTwist { matrix, order })
    }

    /// Whether the twist maps the simple system to itself.
    pub fn preserves_simples(&self, datum: &BasedRootDatum) -> bool {
        datum.simples.iter().all(|&i| {
            let img = self.matrix.mul_vec(&datum.roots[i]);
            datum.root_index(&img).is_some_and(|k| datum.simples.contains(&k))
        })
    }
}

/// Inverse transpose, acting on the dual datum's character lattice.
pub fn dual_twist(twist: &GaloisTwist, datum: &BasedRootDatum) -> Result<GaloisTwist> {
    GaloisTwist::new(twist.matrix.clone(), datum)?;
    let m = twist.matrix.contragredient().ok_or_else(|| Error::TwistMismatch("not invertible".into()))?;
    GaloisTwist::new(m, &datum.dualize())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl2_standard() {
        let d = standard_datum(Family::GL, 2).unwrap();
        assert_eq!(d.rank, 2);
        let mut r = d.roots.clone();
        r.sort();
        assert_eq!(r, vec![vec![-1, 1], vec![1, -1]]);
        assert_eq!(d.roots, d.coroots);
        assert!(d.validate().is_ok());
    }

    #[test]
    fn sl2_and_pgl2() {
        let sl = standard_datum(Family::SL, 2).unwrap();
        assert_eq!(sl.rank, 1);
        let i = sl.simples[0];
        assert_eq!((sl.roots[i].clone(), sl.coroots[i].clone()), (vec![2], vec![1]));
        let pgl = standard_datum(Family::PGL, 2).unwrap();
        let i = pgl.simples[0];
        assert_eq!((pgl.roots[i].clone(), pgl.coroots[i].clone()), (vec![1], vec![2]));
        assert!(sl.dualize().is_isomorphic(&pgl));
        assert!(!sl.is_isomorphic(&pgl));
    }

    #[test]
    fn sp4_type_c2() {
        let d = standard_datum(Family::Sp, 4).unwrap();
        assert_eq!(d.rank, 2);
        assert_eq!(d.positive_roots().len(), 4);
        assert_eq!(d.cartan(), vec![vec![2, -1], vec![-2, 2]]);
    }

    #[test]
    fn axiom_errors() {
        let d = BasedRootDatum { rank: 1, roots: vec![vec![1], vec![-1]], coroots: vec![vec![1], vec![-1]], simples: vec![0] };
        assert_eq!(d.validate(), Err(Error::Axiom { axiom: Axiom::Pairing, index: 0 }));
        assert!(d.validate().unwrap_err().to_string().contains("pairing axiom"));
        let d = BasedRootDatum { rank: 1, roots: vec![vec![2]], coroots: vec![vec![1]], simples: vec![0] };
        assert!(d.validate().unwrap_err().to_string().contains("closure under negation"));
        let d = BasedRootDatum {
            rank: 1,
            roots: vec![vec![1], vec![-1], vec![2], vec![-2]],
            coroots: vec![vec![2], vec![-2], vec![1], vec![-1]],
            simples: vec![0],
        };
        assert_eq!(d.validate(), Err(Error::Axiom { axiom: Axiom::Reduced, index: 0 }));
    }

    #[test]
    fn missing_simple_positivity() {
        let mut d = standard_datum(Family::GL, 3).unwrap();
        d.simples.pop();
        assert!(matches!(d.validate(), Err(Error::Axiom { axiom: Axiom::SimplePositivity, .. })));
    }

    #[test]
    fn all_constructors_valid_and_self_dual_twice() {
        for (f, n) in [
            (Family::GL, 1),
            (Family::GL, 4),
            (Family::SL, 3),
            (Family::PGL, 4),
            (Family::Sp, 6),
            (Family::SO, 7),
            (Family::SO, 8),
            (Family::SO, 4),
            (Family::SO, 3),
            (Family::Torus, 3),
        ] {
            let d = standard_datum(f, n).unwrap();
            assert!(d.dualize().validate().is_ok(), "{f}{n}");
            assert_eq!(d.dualize().dualize(), d);
        }
        assert!(standard_datum(Family::Sp, 3).is_err());
        assert!(standard_datum(Family::SL, 1).is_err());
    }

    #[test]
    fn gl_self_dual() {
        let d = standard_datum(Family::GL, 3).unwrap();
        assert!(d.dualize().is_isomorphic(&d));
        let b = standard_datum(Family::SO, 5).unwrap();
        let c = standard_datum(Family::Sp, 4).unwrap();
        assert!(b.dualize().is_isomorphic(&c));
        assert!(!b.is_isomorphic(&c));
    }

    #[test]
    fn twist_examples() {
        let gl2 = standard_datum(Family::GL, 2).unwrap();
        let id = GaloisTwist::trivial(2);
        assert_eq!(dual_twist(&id, &gl2).unwrap(), id);
        let swap = GaloisTwist::new(Matrix::from_rows(&[vec![0, 1], vec![1, 0]]), &gl2).unwrap();
        assert_eq!(swap.order, 2);
        assert_eq!(dual_twist(&swap, &gl2).unwrap().matrix, swap.matrix);
        let t = BasedRootDatum::torus(2);
        let m = Matrix::from_rows(&[vec![0, 1], vec![-1, -1]]);
        let tw = GaloisTwist::new(m.clone(), &t).unwrap();
        assert_eq!(tw.order, 3);
        let dt = dual_twist(&tw, &t).unwrap();
        assert_eq!(dt.matrix, m.inverse().unwrap().transpose());
        assert_eq!(dt.order, 3);
        assert_eq!(dual_twist(&dt, &t.dualize()).unwrap(), tw);
        let bad = Matrix::from_rows(&[vec![1, 1], vec![0, 1]]);
        assert!(GaloisTwist::new(bad, &gl2).is_err());
    }

    #[test]
    fn text_round_trip() {
        let d = standard_datum(Family::Sp, 4).unwrap();
        let (e, t) = BasedRootDatum::parse_text(&d.to_text()).unwrap();
        assert_eq!(d, e);
        assert!(t.is_none());
        let text = "rank=1\nroot 2 coroot 1 simple\nroot -2 coroot -1\ntwist 1\n";
        let (e, t) = BasedRootDatum::parse_text(text).unwrap();
        assert_eq!(e, standard_datum(Family::SL, 2).unwrap());
        assert_eq!(t.unwrap(), Matrix::identity(1));
        let err = BasedRootDatum::parse_text("rank=1\nroot 2 corot 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn family_specs() {
        assert_eq!(Family::parse_spec("GL2").unwrap(), (Family::GL, 2));
        assert_eq!(Family::parse_spec("Sp4").unwrap(), (Family::Sp, 4));
        assert_eq!(Family::parse_spec("T1").unwrap(), (Family::Torus, 1));
        assert!(Family::parse_spec("E8x").is_err());
    }
}
