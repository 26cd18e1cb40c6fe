//! Small finite groups given by multiplication tables.

use std::collections::BTreeMap;

/// A finite group on `0..n` with identity `0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    inv: Vec<usize>,
}

impl FiniteGroup {
    pub fn trivial() -> Self {
        FiniteGroup { table: vec![vec![0]], inv: vec![0] }
    }

    /// Panics unless `table` is a group law with identity `0`.
    pub fn from_table(table: Vec<Vec<usize>>) -> Self {
        let n = table.len();
        assert!(n > 0 && table.iter().all(|r| r.len() == n));
        for (i, row) in table.iter().enumerate() {
            assert_eq!(row[0], i, "0 is not a right identity");
            assert_eq!(table[0][i], i, "0 is not a left identity");
        }
        let inv: Vec<usize> = (0..n).map(|i| (0..n).find(|&j| table[i][j] == 0).expect("inverse")).collect();
        FiniteGroup { table, inv }
    }

    pub fn cyclic(n: usize) -> Self {
        Self::from_table((0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect())
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn is_associative(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c)))))
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// Number of conjugacy classes of the subgroup with the given elements.
    pub fn class_count_in(&self, subgroup: &[usize]) -> usize {
        let mut seen = vec![false; self.order()];
        let mut count = 0;
        for &x in subgroup {
            if seen[x] {
                continue;
            }
            count += 1;
            for &g in subgroup {
                seen[self.conjugate(g, x)] = true;
            }
        }
        count
    }

    pub fn class_count(&self) -> usize {
        let all: Vec<usize> = (0..self.order()).collect();
        self.class_count_in(&all)
    }

    pub fn is_elementary_abelian_2(&self) -> bool {
        self.is_abelian() && (0..self.order()).all(|a| self.mul(a, a) == 0)
    }

    /// Isomorphism type for small orders.
    pub fn label(&self) -> String {
        let n = self.order();
        if n == 1 {
            return "1".into();
        }
        if self.is_abelian() {
            return abelian_label(self);
        }
        let mut orders: BTreeMap<usize, usize> = BTreeMap::new();
        for a in 0..n {
            *orders.entry(self.element_order(a)).or_default() += 1;
        }
        let sig: Vec<(usize, usize)> = orders.into_iter().collect();
        let known: &[(&[(usize, usize)], &str)] = &[
            (&[(1, 1), (2, 3), (3, 2)], "S3"),
            (&[(1, 1), (2, 5), (4, 2)], "D8"),
            (&[(1, 1), (2, 1), (4, 6)], "Q8"),
            (&[(1, 1), (2, 5), (5, 4)], "D10"),
            (&[(1, 1), (2, 3), (3, 8)], "A4"),
            (&[(1, 1), (2, 7), (3, 2), (6, 2)], "D12"),
            (&[(1, 1), (2, 1), (3, 2), (4, 6), (6, 2)], "Dic12"),
            (&[(1, 1), (2, 7), (7, 6)], "D14"),
            (&[(1, 1), (2, 9), (4, 2), (8, 4)], "D16"),
            (&[(1, 1), (2, 5), (4, 6), (8, 4)], "SD16"),
            (&[(1, 1), (2, 1), (4, 10), (8, 4)], "Q16"),
            (&[(1, 1), (2, 3), (4, 4), (8, 8)], "M16"),
        ];
        known
            .iter()
            .find(|(s, _)| *s == sig.as_slice())
            .map(|(_, name)| name.to_string())
            .unwrap_or_else(|| format!("nonabelian of order {n}"))
    }
}

fn abelian_label(g: &FiniteGroup) -> String {
    let n = g.order();
    let mut factors: Vec<usize> = Vec::new();
    let mut m = n;
    let mut p = 2;
    while m > 1 {
        if m % p != 0 {
            p += 1;
            continue;
        }
        while m % p == 0 {
            m /= p;
        }
        // |G[p^j]| = p^(sum min(j, e_i))
        let mut sums = vec![0u32];
        let mut pj = 1;
        loop {
            pj *= p;
            let c = (0..n).filter(|&a| pj % g.element_order(a) == 0).count();
            let e = (c as f64).log(p as f64).round() as u32;
            if e == *sums.last().unwrap() {
                break;
            }
            sums.push(e);
        }
        // number of cyclic factors with exponent >= j is sums[j] - sums[j-1]
        let ge: Vec<u32> = sums.windows(2).map(|w| w[1] - w[0]).collect();
        for j in 0..ge.len() {
            let next = ge.get(j + 1).copied().unwrap_or(0);
            for _ in 0..(ge[j] - next) {
                factors.push(p.pow(j as u32 + 1));
            }
        }
    }
    factors.sort_unstable();
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < factors.len() {
        let j = (i..factors.len()).find(|&k| factors[k] != factors[i]).unwrap_or(factors.len());
        let k = j - i;
        parts.push(if k == 1 { format!("Z/{}", factors[i]) } else { format!("(Z/{})^{}", factors[i], k) });
        i = j;
    }
    parts.join(" x ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
        let (n, m) = (a.order(), b.order());
        let table = (0..n * m)
            .map(|x| (0..n * m).map(|y| a.mul(x / m, y / m) * m + b.mul(x % m, y % m)).collect())
            .collect();
        FiniteGroup::from_table(table)
    }

    fn s3() -> FiniteGroup {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let table = perms.iter().map(|a| perms.iter().map(|b| idx([a[b[0]], a[b[1]], a[b[2]]])).collect()).collect();
        FiniteGroup::from_table(table)
    }

    #[test]
    fn labels() {
        assert_eq!(FiniteGroup::trivial().label(), "1");
        assert_eq!(FiniteGroup::cyclic(2).label(), "Z/2");
        let k = product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
        assert_eq!(k.label(), "(Z/2)^2");
        assert!(k.is_elementary_abelian_2());
        assert_eq!(product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(4)).label(), "Z/2 x Z/4");
        assert_eq!(FiniteGroup::cyclic(6).label(), "Z/2 x Z/3");
        assert_eq!(s3().label(), "S3");
    }

    #[test]
    fn class_counts() {
        assert_eq!(s3().class_count(), 3);
        assert_eq!(FiniteGroup::cyclic(5).class_count(), 5);
        assert!(s3().is_associative());
        assert_eq!(s3().class_count_in(&[0, 1]), 2);
    }
}
