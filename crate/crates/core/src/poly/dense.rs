//! Dense univariate polynomials over a [`FieldSpec`], stored little-endian
//! as canonical element indices.

use crate::arith;
use crate::field::FieldSpec;

pub(crate) fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

/// Degree of a trimmed polynomial; `None` for zero.
pub(crate) fn degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub(crate) fn sub(field: &FieldSpec, a: &[u64], b: &[u64]) -> Vec<u64> {
    let len = a.len().max(b.len());
    let mut out: Vec<u64> = (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            field.sub_index(x, y)
        })
        .collect();
    trim(&mut out);
    out
}

/// Remainder of `a` modulo a nonzero `m`.
pub(crate) fn rem(field: &FieldSpec, a: &[u64], m: &[u64]) -> Vec<u64> {
    let dm = degree(m).expect("nonzero divisor");
    let lead_inv = field.inv_index(m[dm]).expect("nonzero leading coefficient");
    let mut r = a.to_vec();
    trim(&mut r);
    while let Some(dr) = degree(&r) {
        if dr < dm {
            break;
        }
        let c = field.mul_index(r[dr], lead_inv);
        let shift = dr - dm;
        for (i, &mi) in m[..=dm].iter().enumerate() {
            r[shift + i] = field.sub_index(r[shift + i], field.mul_index(c, mi));
        }
        trim(&mut r);
    }
    r
}

/// Monic gcd; zero when both inputs are zero.
pub(crate) fn gcd(field: &FieldSpec, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(field, &x, &y);
        x = y;
        y = r;
    }
    if let Some(d) = degree(&x) {
        let inv = field.inv_index(x[d]).expect("nonzero");
        for c in x.iter_mut() {
            *c = field.mul_index(*c, inv);
        }
    }
    x
}

/// Arithmetic in `GF(q)[x] / (f)` for a monic `f` of degree >= 1.
pub(crate) struct QuotientRing<'a> {
    field: &'a FieldSpec,
    modulus: &'a [u64],
    deg: usize,
}

impl<'a> QuotientRing<'a> {
    pub(crate) fn new(field: &'a FieldSpec, modulus: &'a [u64]) -> Self {
        let deg = modulus.len() - 1;
        debug_assert!(deg >= 1 && modulus[deg] == 1);
        Self {
            field,
            modulus,
            deg,
        }
    }

    /// The class of `x`, as a length-`deg` residue vector.
    pub(crate) fn x(&self) -> Vec<u64> {
        self.reduce(vec![0, 1])
    }

    pub(crate) fn one(&self) -> Vec<u64> {
        let mut v = vec![0; self.deg];
        v[0] = 1;
        v
    }

    /// Reduce an arbitrary vector to a length-`deg` residue vector.
    pub(crate) fn reduce(&self, mut a: Vec<u64>) -> Vec<u64> {
        let f = self.field;
        let d = self.deg;
        for t in (d..a.len()).rev() {
            let c = a[t];
            if c == 0 {
                continue;
            }
            a[t] = 0;
            for i in 0..d {
                a[t - d + i] = f.sub_index(a[t - d + i], f.mul_index(c, self.modulus[i]));
            }
        }
        a.resize(d, 0);
        a
    }

    pub(crate) fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let f = self.field;
        let mut prod = vec![0u64; a.len() + b.len()];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y != 0 {
                    prod[i + j] = f.add_index(prod[i + j], f.mul_index(x, y));
                }
            }
        }
        self.reduce(prod)
    }

    pub(crate) fn pow(&self, a: &[u64], mut exp: u64) -> Vec<u64> {
        let mut base = a.to_vec();
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

/// Rabin's test: `f` of degree `D` is irreducible iff `x^(q^D) = x mod f`
/// and `gcd(x^(q^(D/t)) - x, f) = 1` for every prime `t | D`.
/// `f` must be monic, little-endian, with no trailing zeros.
pub(crate) fn is_irreducible(field: &FieldSpec, f: &[u64]) -> bool {
    let deg = f.len() - 1;
    if deg == 1 {
        return true;
    }
    if f[0] == 0 {
        return false;
    }
    let ring = QuotientRing::new(field, f);
    let x = ring.x();
    let q = field.order();
    let splits: Vec<usize> = arith::factorize(deg as u64)
        .expect("deg >= 1")
        .distinct_primes()
        .map(|t| deg / t as usize)
        .collect();

    let mut frob = x.clone();
    for j in 1..=deg {
        frob = ring.pow(&frob, q);
        if splits.contains(&j) {
            let g = gcd(field, &sub(field, &frob, &x), f);
            if degree(&g) != Some(0) {
                return false;
            }
        }
    }
    frob == x
}
