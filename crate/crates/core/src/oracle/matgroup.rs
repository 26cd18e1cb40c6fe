//! Brute-force finite classical groups over explicit fields.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::field::SmallField;
use crate::error::{Error, Result};

pub const MAX_GROUP: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MatrixFamily {
    GL,
    SL,
    Sp,
}

impl fmt::Display for MatrixFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MatrixGroupSpec {
    pub family: MatrixFamily,
    /// Matrix size.
    pub n: usize,
    pub q: u64,
}

impl FromStr for MatrixGroupSpec {
    type Err = Error;

    /// `GL2`, `SL3`, `Sp4` with `q` supplied separately as `:q`, e.g. `GL2:3`.
    fn from_str(s: &str) -> Result<Self> {
        let (g, q) = s.split_once(':').ok_or_else(|| Error::InvalidArgument(format!("expected FAMILYn:q, got {s}")))?;
        let q: u64 = q.parse().map_err(|_| Error::InvalidArgument(format!("bad q in {s}")))?;
        let (family, n) = if let Some(n) = g.strip_prefix("GL") {
            (MatrixFamily::GL, n)
        } else if let Some(n) = g.strip_prefix("SL") {
            (MatrixFamily::SL, n)
        } else if let Some(n) = g.strip_prefix("Sp") {
            (MatrixFamily::Sp, n)
        } else {
            return Err(Error::InvalidArgument(format!("unknown family in {s}")));
        };
        let n: usize = n.parse().map_err(|_| Error::InvalidArgument(format!("bad size in {s}")))?;
        MatrixGroupSpec::new(family, n, q)
    }
}

impl MatrixGroupSpec {
    pub fn new(family: MatrixFamily, n: usize, q: u64) -> Result<Self> {
        if n == 0 || (family == MatrixFamily::Sp && n % 2 == 1) {
            return Err(Error::InvalidArgument(format!("{family}{n} is not defined")));
        }
        crate::arith::check_q(q as i64)?;
        Ok(MatrixGroupSpec { family, n, q })
    }

    /// The order from the classical formula.
    pub fn classical_order(&self) -> Option<u128> {
        let q = self.q as u128;
        let n = self.n as u32;
        let gl = |n: u32| -> Option<u128> {
            let mut o: u128 = 1;
            for i in 0..n {
                o = o.checked_mul(q.checked_pow(n)?.checked_sub(q.checked_pow(i)?)?)?;
            }
            Some(o)
        };
        match self.family {
            MatrixFamily::GL => gl(n),
            MatrixFamily::SL => gl(n).map(|o| o / (q - 1)),
            MatrixFamily::Sp => {
                let m = n / 2;
                let mut o = q.checked_pow(m * m)?;
                for i in 1..=m {
                    o = o.checked_mul(q.checked_pow(2 * i)? - 1)?;
                }
                Some(o)
            }
        }
    }
}

/// Dense arithmetic tables for the small fields used here.
struct Tables {
    q: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
}

impl Tables {
    fn new(f: &SmallField) -> Self {
        let q = f.order() as usize;
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for a in 0..q {
            for b in 0..q {
                add[a * q + b] = f.add(a as u32, b as u32) as u16;
                mul[a * q + b] = f.mul(a as u32, b as u32) as u16;
            }
        }
        Tables { q, add, mul }
    }

    fn matmul(&self, n: usize, a: &[u16], b: &[u16]) -> Vec<u16> {
        let q = self.q;
        let mut out = vec![0u16; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut s = 0u16;
                for k in 0..n {
                    let p = self.mul[a[i * n + k] as usize * q + b[k * n + j] as usize];
                    s = self.add[s as usize * q + p as usize];
                }
                out[i * n + j] = s;
            }
        }
        out
    }

    fn key(&self, m: &[u16]) -> u128 {
        m.iter().fold(0u128, |acc, &x| acc * self.q as u128 + x as u128)
    }
}

/// A fully enumerated matrix group.
pub struct MatrixGroup {
    pub spec: MatrixGroupSpec,
    pub field: SmallField,
    elements: Vec<Vec<u16>>,
    index: HashMap<u128, u32>,
    generators: Vec<Vec<u16>>,
    tables: Tables,
}

fn identity(n: usize) -> Vec<u16> {
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

fn generators(spec: &MatrixGroupSpec, f: &SmallField) -> Vec<Vec<u16>> {
    let n = spec.n;
    let mut gens = Vec::new();
    match spec.family {
        MatrixFamily::GL | MatrixFamily::SL => {
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        for a in f.units() {
                            let mut m = identity(n);
                            m[i * n + j] = a as u16;
                            gens.push(m);
                        }
                    }
                }
            }
            if spec.family == MatrixFamily::GL {
                let mut m = identity(n);
                m[0] = f.generator() as u16;
                gens.push(m);
            }
        }
        MatrixFamily::Sp => gens = sp_generators(n, f, &symplectic_form(f, n)),
    }
    gens
}

/// Gram matrix of the standard symplectic form: `<e_i, e_{n-1-i}> = ±1`.
fn symplectic_form(f: &SmallField, n: usize) -> Vec<u32> {
    let mut j = vec![0u32; n * n];
    for i in 0..n / 2 {
        j[i * n + (n - 1 - i)] = 1;
        j[(n - 1 - i) * n + i] = f.neg(1);
    }
    j
}

impl MatrixGroup {
    pub fn enumerate(spec: MatrixGroupSpec, field: SmallField) -> Result<Self> {
        if field.order() as u64 != spec.q {
            return Err(Error::InvalidArgument("field does not match q".into()));
        }
        let order = spec.classical_order().ok_or(Error::Overflow("group order"))?;
        if order > MAX_GROUP as u128 {
            return Err(Error::BoundExceeded { what: "group order", bound: MAX_GROUP, size: order.min(u64::MAX as u128) as u64 });
        }
        let gens = generators(&spec, &field);
        let tables = Tables::new(&field);
        let n = spec.n;
        let id = identity(n);
        let mut index = HashMap::from([(tables.key(&id), 0u32)]);
        let mut elements = vec![id];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &gens {
                let x = tables.matmul(n, g, &elements[i]);
                let k = tables.key(&x);
                if !index.contains_key(&k) {
                    if elements.len() as u128 >= order {
                        return Err(Error::Incompatible(format!("{}{} over F_{} exceeds its classical order", spec.family, n, spec.q)));
                    }
                    index.insert(k, elements.len() as u32);
                    elements.push(x);
                    queue.push_back(elements.len() - 1);
                }
            }
        }
        if elements.len() as u128 != order {
            return Err(Error::Incompatible(format!("generated {} elements, expected {order}", elements.len())));
        }
        Ok(MatrixGroup { spec, field, elements, index, generators: gens, tables })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: usize) -> &[u16] {
        &self.elements[i]
    }

    /// Membership predicate of the family (determinant or form condition).
    pub fn satisfies_predicate(&self, m: &[u16]) -> bool {
        let f = &self.field;
        let n = self.spec.n;
        match self.spec.family {
            MatrixFamily::GL => det(f, n, m) != 0,
            MatrixFamily::SL => det(f, n, m) == 1,
            MatrixFamily::Sp => {
                let form: Vec<u16> = symplectic_form(f, n).into_iter().map(|x| x as u16).collect();
                let mt: Vec<u16> = (0..n * n).map(|k| m[(k % n) * n + k / n]).collect();
                self.tables.matmul(n, &self.tables.matmul(n, &mt, &form), m) == form
            }
        }
    }

    /// Conjugacy classes by merging `g x` with `x g` for generators `g`.
    pub fn class_count(&self) -> usize {
        let n = self.spec.n;
        let mut parent: Vec<u32> = (0..self.elements.len() as u32).collect();
        fn find(p: &mut [u32], mut x: u32) -> u32 {
            while p[x as usize] != x {
                p[x as usize] = p[p[x as usize] as usize];
                x = p[x as usize];
            }
            x
        }
        for x in &self.elements {
            for g in &self.generators {
                let a = self.index[&self.tables.key(&self.tables.matmul(n, g, x))];
                let b = self.index[&self.tables.key(&self.tables.matmul(n, x, g))];
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra.max(rb) as usize] = ra.min(rb);
                }
            }
        }
        (0..parent.len() as u32).filter(|&x| find(&mut parent, x) == x).count()
    }
}

/// Symplectic transvections `x -> x + a <x, v> v` along 0/1 vectors `v`.
fn sp_generators(n: usize, f: &SmallField, form: &[u32]) -> Vec<Vec<u16>> {
    let mut gens = Vec::new();
    for mask in 1u32..1 << n {
        let v: Vec<u32> = (0..n).map(|i| mask >> i & 1).collect();
        for a in f.units() {
            let mut m = identity(n);
            for c in 0..n {
                let pair = (0..n).fold(0, |acc, k| f.add(acc, f.mul(form[c * n + k], v[k])));
                for r in 0..n {
                    let delta = f.mul(a, f.mul(pair, v[r]));
                    m[r * n + c] = f.add(m[r * n + c] as u32, delta) as u16;
                }
            }
            gens.push(m);
        }
    }
    gens
}

fn det(f: &SmallField, n: usize, m: &[u16]) -> u32 {
    let mut a: Vec<u32> = m.iter().map(|&x| x as u32).collect();
    let mut d = 1;
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| a[r * n + c] != 0) else { return 0 };
        if p != c {
            for k in 0..n {
                a.swap(p * n + k, c * n + k);
            }
            d = f.neg(d);
        }
        let piv = a[c * n + c];
        d = f.mul(d, piv);
        let inv = f.inv(piv).expect("nonzero");
        for r in c + 1..n {
            let factor = f.mul(a[r * n + c], inv);
            for k in c..n {
                a[r * n + k] = f.sub(a[r * n + k], f.mul(factor, a[c * n + k]));
            }
        }
    }
    d
}

/// Number of conjugacy classes, using the default field model.
pub fn conj_class_count(spec: MatrixGroupSpec) -> Result<usize> {
    let field = SmallField::new(spec.q)?;
    Ok(MatrixGroup::enumerate(spec, field)?.class_count())
}
