//! Dense univariate polynomials over a prime field F_p.
//!
//! Coefficients are stored in ascending degree, reduced into `0..p`, with no
//! trailing zeros. The zero polynomial is the empty vector.

pub(crate) fn trim(mut c: Vec<u64>) -> Vec<u64> {
    while c.last() == Some(&0) {
        c.pop();
    }
    c
}

pub(crate) fn from_ints(p: u64, coeffs: &[i64]) -> Vec<u64> {
    let pi = p as i64;
    trim(coeffs.iter().map(|&c| c.rem_euclid(pi) as u64).collect())
}

pub(crate) fn degree(a: &[u64]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub(crate) fn add(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len().max(b.len());
    let out = (0..n).map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p).collect();
    trim(out)
}

pub(crate) fn neg(p: u64, a: &[u64]) -> Vec<u64> {
    a.iter().map(|&c| if c == 0 { 0 } else { p - c }).collect()
}

pub(crate) fn sub(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    add(p, a, &neg(p, b))
}

pub(crate) fn mul(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

pub(crate) fn inv_mod(p: u64, a: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// Long division; panics when `b` is zero.
pub(crate) fn div_rem(p: u64, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
    let db = degree(b).expect("polynomial division by zero");
    let lead_inv = inv_mod(p, b[db]);
    let mut r = a.to_vec();
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![0u64; r.len() - db];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = r[dr] * lead_inv % p;
        let shift = dr - db;
        q[shift] = c;
        for (j, &bj) in b.iter().enumerate() {
            let t = bj * c % p;
            r[shift + j] = (r[shift + j] + p - t) % p;
        }
        r = trim(r);
    }
    (trim(q), r)
}

/// All monic polynomials of exactly `deg`, in lexicographic order of the
/// lower coefficients.
pub(crate) fn monic_of_degree(p: u64, deg: usize) -> impl Iterator<Item = Vec<u64>> {
    let count = (p as u128).checked_pow(deg as u32).unwrap_or(u128::MAX);
    (0..count).map(move |mut idx| {
        let mut c = Vec::with_capacity(deg + 1);
        for _ in 0..deg {
            c.push((idx % p as u128) as u64);
            idx /= p as u128;
        }
        c.push(1);
        c
    })
}

/// All polynomials of degree below `deg` (including zero).
pub(crate) fn all_below_degree(p: u64, deg: usize) -> impl Iterator<Item = Vec<u64>> {
    let count = (p as u128).pow(deg as u32);
    (0..count).map(move |mut idx| {
        let mut c = Vec::with_capacity(deg);
        for _ in 0..deg {
            c.push((idx % p as u128) as u64);
            idx /= p as u128;
        }
        trim(c)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_identity() {
        let p = 3;
        let a = from_ints(p, &[1, 2, 0, 1, 2]);
        let b = from_ints(p, &[2, 1, 1]);
        let (q, r) = div_rem(p, &a, &b);
        assert!(r.len() < b.len());
        assert_eq!(add(p, &mul(p, &q, &b), &r), a);
    }

    #[test]
    fn monic_enumeration_counts() {
        assert_eq!(monic_of_degree(2, 3).count(), 8);
        assert_eq!(all_below_degree(3, 2).count(), 9);
        assert!(monic_of_degree(5, 0).eq(std::iter::once(vec![1])));
    }
}
