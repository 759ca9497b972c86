//! Monomials in a family of graded variables `v1, v3, v5, ...`.

use std::cmp::Ordering;

/// A monomial `Π v_n^{e_n}` stored as `(n, e_n)` pairs sorted by index,
/// every exponent at least 1. The variable `v_n` has weight `n`.
///
/// Ordering is by weight, then by exponent vectors compared from the
/// largest index downward (smaller exponent first). Within weight 6 this
/// gives `D1^6 < D1^3*D3 < D3^2 < D1*D5`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Mono {
    weight: u32,
    factors: Vec<(u32, u32)>,
}

impl Mono {
    pub fn one() -> Self {
        Self::default()
    }

    /// The single variable `v_n`.
    pub fn var(n: u32) -> Self {
        Self::power(n, 1)
    }

    pub fn power(n: u32, e: u32) -> Self {
        if e == 0 {
            return Self::one();
        }
        Self {
            weight: n * e,
            factors: vec![(n, e)],
        }
    }

    /// Builds a monomial from `(index, exponent)` pairs in any order;
    /// repeated indices are combined and zero exponents dropped.
    pub fn from_pairs<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Self {
        let mut factors: Vec<(u32, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        factors.sort_unstable();
        let mut merged: Vec<(u32, u32)> = Vec::with_capacity(factors.len());
        for (n, e) in factors {
            match merged.last_mut() {
                Some(last) if last.0 == n => last.1 += e,
                _ => merged.push((n, e)),
            }
        }
        let weight = merged.iter().map(|&(n, e)| n * e).sum();
        Self {
            weight,
            factors: merged,
        }
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    /// Total degree, ignoring the grading.
    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[(u32, u32)] {
        &self.factors
    }

    pub fn exponent(&self, n: u32) -> u32 {
        match self.factors.binary_search_by_key(&n, |&(i, _)| i) {
            Ok(pos) => self.factors[pos].1,
            Err(_) => 0,
        }
    }

    pub fn max_index(&self) -> Option<u32> {
        self.factors.last().map(|&(n, _)| n)
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let (a, b) = (&self.factors, &other.factors);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Mono {
            weight: self.weight + other.weight,
            factors: out,
        }
    }

    /// Lowers the exponent of `v_n` by `k`; `None` if it is smaller than `k`.
    pub fn lower(&self, n: u32, k: u32) -> Option<Mono> {
        if k == 0 {
            return Some(self.clone());
        }
        let pos = self.factors.binary_search_by_key(&n, |&(i, _)| i).ok()?;
        let e = self.factors[pos].1;
        if e < k {
            return None;
        }
        let mut factors = self.factors.clone();
        if e == k {
            factors.remove(pos);
        } else {
            factors[pos].1 = e - k;
        }
        Some(Mono {
            weight: self.weight - n * k,
            factors,
        })
    }

    /// Renders as `v1^3*v3` with the given variable symbol; `"1"` for the
    /// empty monomial.
    pub fn render(&self, symbol: &str) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        self.factors
            .iter()
            .map(|&(n, e)| {
                if e == 1 {
                    format!("{symbol}{n}")
                } else {
                    format!("{symbol}{n}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight.cmp(&other.weight).then_with(|| {
            let mut a = self.factors.iter().rev().peekable();
            let mut b = other.factors.iter().rev().peekable();
            loop {
                match (a.peek(), b.peek()) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(&&(na, ea)), Some(&&(nb, eb))) => {
                        if na != nb {
                            return na.cmp(&nb);
                        }
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        a.next();
                        b.next();
                    }
                }
            }
        })
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
