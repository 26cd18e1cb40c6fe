//! Finite tori `T_x(F_q)` on the parameter side: torsion points, their
//! character groups and norm maps, all through Smith normal form.

use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::arith::{check_q, checked_pow, multiplicative_order};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::snf::smith;

/// A point of `L (x) Q/Z`, stored as `num / den` with `0 <= num_i < den`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct TorsionPoint {
    num: Vec<i64>,
    den: i64,
    q: i64,
}

impl fmt::Debug for TorsionPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for TorsionPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, n) in self.num.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if *n == 0 {
                write!(f, "0")?;
            } else {
                let g = n.gcd(&self.den);
                if self.den / g == 1 {
                    write!(f, "{}", n / g)?;
                } else {
                    write!(f, "{}/{}", n / g, self.den / g)?;
                }
            }
        }
        write!(f, ")")
    }
}

impl PartialOrd for TorsionPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TorsionPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        self.den.cmp(&other.den).then_with(|| self.num.cmp(&other.num))
    }
}

impl TorsionPoint {
    pub fn new(num: Vec<i64>, den: i64, q: i64) -> Result<Self> {
        if den <= 0 {
            return Err(Error::InvalidArgument("denominator must be positive".into()));
        }
        let mut num: Vec<i64> = num.iter().map(|x| x.rem_euclid(den)).collect();
        let g = num.iter().fold(den, |g, x| g.gcd(x));
        for x in num.iter_mut() {
            *x /= g;
        }
        let den = den / g;
        let (p, _) = check_q(q)?;
        if den % p == 0 {
            return Err(Error::InvalidArgument(format!("denominator {den} not coprime to p = {p}")));
        }
        Ok(TorsionPoint { num, den, q })
    }

    pub fn zero(rank: usize, q: i64) -> Self {
        TorsionPoint { num: vec![0; rank], den: 1, q }
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn rank(&self) -> usize {
        self.num.len()
    }

    pub fn numerators(&self) -> &[i64] {
        &self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    /// Least m with `(q^m - 1) v` in the lattice.
    pub fn level(&self) -> u32 {
        multiplicative_order(self.q, self.den).expect("denominator coprime to q")
    }

    pub fn is_zero(&self) -> bool {
        self.den == 1
    }

    /// Coordinates as reduced fractions `(numerator, denominator)`.
    pub fn coordinates(&self) -> Vec<(i64, i64)> {
        self.num
            .iter()
            .map(|&n| {
                let g = n.gcd(&self.den);
                (n / g, self.den / g)
            })
            .collect()
    }

    fn rebuild(&self, num: Vec<i64>) -> Self {
        let mut num: Vec<i64> = num.iter().map(|x| x.rem_euclid(self.den)).collect();
        let g = num.iter().fold(self.den, |g, x| g.gcd(x));
        for x in num.iter_mut() {
            *x /= g;
        }
        TorsionPoint { num, den: self.den / g, q: self.q }
    }

    pub fn apply(&self, m: &Matrix) -> Self {
        self.rebuild(m.mul_vec(&self.num))
    }

    pub fn scale(&self, k: i64) -> Self {
        self.rebuild(self.num.iter().map(|x| x * k).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let den = self.den.lcm(&other.den);
        let (a, b) = (den / self.den, den / other.den);
        let num: Vec<i64> = self.num.iter().zip(&other.num).map(|(x, y)| x * a + y * b).collect();
        TorsionPoint { num: vec![], den, q: self.q }.rebuild(num)
    }

    /// `<v, a>` as a reduced fraction.
    pub fn pair(&self, a: &[i64]) -> (i64, i64) {
        let n: i64 = self.num.iter().zip(a).map(|(x, y)| x * y).sum();
        let g = n.gcd(&self.den);
        (n / g, self.den / g)
    }

    pub fn pairs_integrally(&self, a: &[i64]) -> bool {
        self.pair(a).1 == 1
    }

    /// `M v = q v` modulo the lattice.
    pub fn is_fixed_by(&self, m: &Matrix, q: i64) -> bool {
        self.apply(m) == self.scale(q)
    }
}

/// A finite abelian group `A^{-1} L / L` for a nonsingular integer matrix `A`.
#[derive(Debug, Clone)]
pub struct FiniteAbelianGroup {
    /// Elementary divisors greater than one.
    pub divisors: Vec<i64>,
    /// One generator per divisor.
    pub generators: Vec<TorsionPoint>,
    relation: Matrix,
    right_inv: Matrix,
    diag: Vec<i64>,
    active: Vec<usize>,
    q: i64,
}

impl FiniteAbelianGroup {
    pub fn from_relation(a: &Matrix, q: i64) -> Result<Self> {
        check_q(q)?;
        if a.det()? == 0 {
            return Err(Error::InvalidArgument("relation matrix is singular".into()));
        }
        let s = smith(a)?;
        let right_inv = s.right.inverse().expect("unimodular");
        let active: Vec<usize> = (0..s.diagonal.len()).filter(|&i| s.diagonal[i] > 1).collect();
        let mut generators = Vec::new();
        for &i in &active {
            let col: Vec<i64> = (0..a.rows()).map(|r| s.right[(r, i)]).collect();
            generators.push(TorsionPoint::new(col, s.diagonal[i], q)?);
        }
        Ok(FiniteAbelianGroup {
            divisors: active.iter().map(|&i| s.diagonal[i]).collect(),
            generators,
            relation: a.clone(),
            right_inv,
            diag: s.diagonal,
            active,
            q,
        })
    }

    pub fn order(&self) -> i64 {
        self.divisors.iter().product()
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn rank(&self) -> usize {
        self.relation.rows()
    }

    pub fn contains(&self, v: &TorsionPoint) -> bool {
        self.relation.mul_vec(v.numerators()).iter().all(|x| x % v.denominator() == 0)
    }

    /// Coordinates of `v` with respect to the generators.
    pub fn coordinates(&self, v: &TorsionPoint) -> Option<Vec<i64>> {
        if !self.contains(v) {
            return None;
        }
        let w = self.right_inv.mul_vec(v.numerators());
        let mut out = Vec::with_capacity(self.active.len());
        for (k, &i) in self.active.iter().enumerate() {
            let t = w[i] as i128 * self.diag[i] as i128;
            debug_assert_eq!(t % v.denominator() as i128, 0);
            out.push(((t / v.denominator() as i128) as i64).rem_euclid(self.divisors[k]));
        }
        Some(out)
    }

    pub fn element(&self, coords: &[i64]) -> TorsionPoint {
        let mut acc = TorsionPoint::zero(self.rank(), self.q);
        for (g, &c) in self.generators.iter().zip(coords) {
            acc = acc.add(&g.scale(c));
        }
        acc
    }

    pub fn coordinate_vectors(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![]];
        for &d in &self.divisors {
            out = out.into_iter().flat_map(|v| (0..d).map(move |c| [v.clone(), vec![c]].concat())).collect();
        }
        out
    }

    pub fn elements(&self) -> Vec<TorsionPoint> {
        self.coordinate_vectors().iter().map(|c| self.element(c)).collect()
    }

    pub fn preserved_by(&self, s: &Matrix) -> bool {
        self.generators.iter().all(|g| self.contains(&g.apply(s)))
    }

    /// Action of `s` on characters: `chi -> chi o s`, in coordinates.
    fn character_action(&self, s: &Matrix) -> Result<Vec<Vec<i64>>> {
        if !self.preserved_by(s) {
            return Err(Error::NotPreserved);
        }
        // rows: images of generators in generator coordinates
        Ok(self.generators.iter().map(|g| self.coordinates(&g.apply(s)).expect("preserved")).collect())
    }

    fn act_on_character(&self, table: &[Vec<i64>], c: &[i64]) -> Vec<i64> {
        (0..self.divisors.len())
            .map(|i| {
                let di = self.divisors[i] as i128;
                let mut acc = 0i128;
                for j in 0..self.divisors.len() {
                    acc += di * table[i][j] as i128 * c[j] as i128 / self.divisors[j] as i128;
                }
                acc.rem_euclid(di) as i64
            })
            .collect()
    }
}

/// `ker(M - q)` on `L (x) Q/Z`, presented by the Smith form of `q - M`.
pub fn fixed_point_group(x: &Matrix, q: i64) -> Result<FiniteAbelianGroup> {
    let a = Matrix::scalar(x.rows(), q).sub(x);
    FiniteAbelianGroup::from_relation(&a, q)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterOrbit {
    /// Minimal member, as values on the generators (numerators over the divisors).
    pub representative: Vec<i64>,
    pub members: Vec<Vec<i64>>,
}

/// Orbits of the group generated by `autos` on `Hom(G, Q/Z)`.
pub fn character_orbits(g: &FiniteAbelianGroup, autos: &[Matrix]) -> Result<Vec<CharacterOrbit>> {
    let tables = autos.iter().map(|s| g.character_action(s)).collect::<Result<Vec<_>>>()?;
    let mut seen = BTreeSet::new();
    let mut orbits = Vec::new();
    for c in g.coordinate_vectors() {
        if seen.contains(&c) {
            continue;
        }
        let mut members = BTreeSet::from([c.clone()]);
        let mut queue = VecDeque::from([c.clone()]);
        while let Some(x) = queue.pop_front() {
            for t in &tables {
                let y = g.act_on_character(t, &x);
                if members.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen.extend(members.iter().cloned());
        let members: Vec<_> = members.into_iter().collect();
        orbits.push(CharacterOrbit { representative: members[0].clone(), members });
    }
    orbits.sort_by(|a, b| a.representative.cmp(&b.representative));
    Ok(orbits)
}

/// The norm `F_{q^{md}}^x -> F_{q^m}^x` on cyclic models.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NormMap {
    pub source_order: i64,
    pub target_order: i64,
    pub multiplier: i64,
    pub kernel_order: i64,
}

impl NormMap {
    /// Image inside the source model: multiplication by the multiplier.
    pub fn apply_embedded(&self, a: i64) -> i64 {
        (a as i128 * self.multiplier as i128).rem_euclid(self.source_order as i128) as i64
    }

    /// Image in the target model, where the target generator is the
    /// multiplier-th power of the source generator.
    pub fn apply(&self, a: i64) -> i64 {
        a.rem_euclid(self.target_order)
    }
}

pub fn norm_map(q: i64, m: u32, d: u32) -> Result<NormMap> {
    check_q(q)?;
    if m == 0 || d == 0 {
        return Err(Error::InvalidArgument("m and d must be positive".into()));
    }
    let source_order = checked_pow(q, m * d)? - 1;
    let target_order = checked_pow(q, m)? - 1;
    let multiplier = source_order / target_order;
    Ok(NormMap { source_order, target_order, multiplier, kernel_order: multiplier })
}
