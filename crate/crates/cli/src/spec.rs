//! Group specifications from the command line.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use fq_langlands::matrix::Matrix;
use fq_langlands::root_datum::{standard_datum, BasedRootDatum, Family, GaloisTwist};
use fq_langlands::weyl::generate;

/// Positional arguments: an optional group name and `key=value` pairs.
#[derive(Debug, Default)]
pub struct Positional {
    pub group: Option<String>,
    pub keys: BTreeMap<String, String>,
}

impl Positional {
    pub fn parse(args: &[String]) -> Result<Self> {
        let mut out = Positional::default();
        for a in args {
            if let Some((k, v)) = a.split_once('=') {
                if out.keys.insert(k.to_string(), v.to_string()).is_some() {
                    bail!("{k} given twice");
                }
            } else if out.group.is_none() {
                out.group = Some(a.clone());
            } else {
                bail!("unexpected argument {a}");
            }
        }
        Ok(out)
    }

    pub fn get<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>> {
        self.keys
            .get(key)
            .map(|v| v.parse::<T>().map_err(|_| anyhow!("bad value {v} for {key}")))
            .transpose()
    }

    pub fn require<T: std::str::FromStr>(&self, key: &str) -> Result<T> {
        self.get(key)?.ok_or_else(|| anyhow!("missing {key}=..."))
    }

    /// Fail on keys outside `allowed`.
    pub fn only(&self, allowed: &[&str]) -> Result<()> {
        match self.keys.keys().find(|k| !allowed.contains(&k.as_str())) {
            Some(k) => bail!("unknown key {k}; expected one of {}", allowed.join(", ")),
            None => Ok(()),
        }
    }
}

/// A resolved group: datum, Frobenius twist on its character lattice, and `q`.
#[derive(Debug, Clone)]
pub struct GroupSpec {
    pub label: String,
    pub family: Option<(Family, usize)>,
    pub datum: BasedRootDatum,
    pub twist: GaloisTwist,
    pub q: i64,
}

impl GroupSpec {
    pub fn resolve(pos: &Positional, datum_file: Option<&Path>, twist_flag: Option<&str>) -> Result<Self> {
        let q: i64 = pos.require("q")?;
        let (label, family, datum, file_twist) = match (datum_file, &pos.group) {
            (Some(path), None) => {
                let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                let (d, t) = BasedRootDatum::parse_text(&text)?;
                (path.display().to_string(), None, d, t)
            }
            (None, Some(g)) => {
                let (f, n) = Family::parse_spec(g)?;
                (g.clone(), Some((f, n)), standard_datum(f, n)?, None)
            }
            (Some(_), Some(_)) => bail!("give either a group name or --datum-file, not both"),
            (None, None) => bail!("missing group, e.g. GL2, or --datum-file"),
        };
        let twist_text = pos.keys.get("twist").map(String::as_str).or(twist_flag);
        let matrix = match twist_text {
            Some(t) => Some(parse_twist(t, &datum)?),
            None => file_twist,
        };
        let twist = match matrix {
            Some(m) => GaloisTwist::new(m, &datum)?,
            None => GaloisTwist::trivial(datum.rank),
        };
        Ok(GroupSpec { label, family, datum, twist, q })
    }

    pub fn is_split(&self) -> bool {
        self.twist.matrix.is_identity()
    }
}

/// `trivial`, `-w0`, `perm:i,j,..`, an inline matrix `a,b;c,d` or a matrix file.
pub fn parse_twist(text: &str, datum: &BasedRootDatum) -> Result<Matrix> {
    let n = datum.rank;
    if text == "trivial" {
        return Ok(Matrix::identity(n));
    }
    if text == "-w0" {
        let w = generate(datum, fq_langlands::weyl::DEFAULT_WEYL_BOUND)?;
        let positive = datum.positive_roots();
        let w0 = w
            .matrices()
            .iter()
            .find(|m| {
                positive.iter().all(|&i| datum.root_index(&m.mul_vec(&datum.roots[i])).is_some_and(|j| !datum.is_positive(j)))
            })
            .ok_or_else(|| anyhow!("no longest element"))?;
        return Ok(w0.neg());
    }
    if let Some(p) = text.strip_prefix("perm:") {
        let perm: Vec<usize> = p.split(',').map(|x| x.trim().parse()).collect::<std::result::Result<_, _>>().context("bad permutation")?;
        let mut sorted = perm.clone();
        sorted.sort_unstable();
        if sorted != (0..n).collect::<Vec<_>>() {
            bail!("perm:{p} is not a permutation of 0..{n}");
        }
        return Ok(Matrix::permutation(&perm));
    }
    if let Ok(m) = parse_inline(text, n) {
        return Ok(m);
    }
    let path = PathBuf::from(text);
    let body = std::fs::read_to_string(&path).with_context(|| format!("twist {text} is neither a keyword, a matrix nor a readable file"))?;
    parse_matrix_file(&body, n)
}

fn parse_inline(text: &str, n: usize) -> Result<Matrix> {
    let rows: Vec<Vec<i64>> = text
        .split(';')
        .map(|r| r.split(',').map(|x| x.trim().parse::<i64>()).collect::<std::result::Result<_, _>>())
        .collect::<std::result::Result<_, _>>()?;
    check_shape(rows, n)
}

fn parse_matrix_file(body: &str, n: usize) -> Result<Matrix> {
    let rows: Vec<Vec<i64>> = body
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(|l| l.split(|c: char| c == ',' || c.is_whitespace()).filter(|x| !x.is_empty()).map(str::parse).collect())
        .collect::<std::result::Result<_, _>>()
        .context("matrix file must hold rows of integers")?;
    check_shape(rows, n)
}

fn check_shape(rows: Vec<Vec<i64>>, n: usize) -> Result<Matrix> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        bail!("twist must be a {n}x{n} matrix");
    }
    Ok(Matrix::from_rows(&rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pos(args: &[&str]) -> Positional {
        Positional::parse(&args.iter().map(|s| s.to_string()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn resolves_standard_groups() {
        let g = GroupSpec::resolve(&pos(&["GL2", "q=3"]), None, None).unwrap();
        assert!(g.is_split());
        let t = GroupSpec::resolve(&pos(&["T1", "q=3", "twist=-1"]), None, None).unwrap();
        assert_eq!(t.twist.matrix, Matrix::from_rows(&[vec![-1]]));
        let u = GroupSpec::resolve(&pos(&["GL3", "q=2", "twist=-w0"]), None, None).unwrap();
        assert_eq!(u.twist.order, 2);
        assert!(GroupSpec::resolve(&pos(&["GL2"]), None, None).is_err());
        assert!(GroupSpec::resolve(&pos(&["GL2", "q=3", "twist=2"]), None, None).is_err());
    }
}
