//! Univariate polynomials: roots in the working field and GF(p) arithmetic.
//!
//! Coefficient vectors are in ascending degree order.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// Largest integer magnitude the divisor enumeration will factor.
const FACTOR_LIMIT: i128 = 1_000_000_000_000;
/// Largest prime for brute-force root search.
const BRUTE_LIMIT: u64 = 1_000_000;

pub fn eval(coeffs: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = x.field().zero();
    for c in coeffs.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

fn scope(msg: String) -> Error {
    Error::SolverScope(msg)
}

fn small(n: &BigInt) -> Result<i128> {
    n.to_i128()
        .filter(|v| v.abs() <= FACTOR_LIMIT)
        .ok_or_else(|| scope(format!("coefficient {n} is too large to factor")))
}

fn divisors(n: i128) -> Vec<i128> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

fn isqrt(n: i128) -> i128 {
    let mut r = (n as f64).sqrt() as i128;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

fn lcm_denoms<'a>(rs: impl Iterator<Item = &'a BigRational>) -> BigInt {
    rs.fold(BigInt::one(), |l, r| l.lcm(r.denom()))
}

/// Distinct roots of the polynomial that lie in its field, in a canonical order.
pub fn roots_in_field(coeffs: &[Scalar]) -> Result<Vec<Scalar>> {
    let Some(first) = coeffs.first() else {
        return Ok(Vec::new());
    };
    let field = first.field();
    let mut c: Vec<Scalar> = coeffs.to_vec();
    while c.last().is_some_and(Scalar::is_zero) {
        c.pop();
    }
    if c.len() <= 1 {
        if c.is_empty() {
            return Err(Error::Input(
                "the zero polynomial has every element as a root".into(),
            ));
        }
        return Ok(Vec::new());
    }
    let mut roots: Vec<Scalar> = Vec::new();
    if c[0].is_zero() {
        roots.push(field.zero());
        let k = c.iter().position(|x| !x.is_zero()).unwrap();
        c.drain(..k);
    }
    let candidates = match field {
        Field::Fp(p) => {
            if p > BRUTE_LIMIT {
                return Err(scope(format!("brute-force root search over GF({p})")));
            }
            (1..p).map(|r| Scalar::Fp(r, p)).collect()
        }
        Field::Q => rational_candidates(&c)?,
        Field::Qi => gaussian_candidates(&c)?,
    };
    for x in candidates {
        if c.len() > 1 && eval(&c, &x).is_zero() && !roots.contains(&x) {
            roots.push(x);
        }
    }
    roots.sort_by(canonical_cmp);
    Ok(roots)
}

pub(crate) fn canonical_cmp(a: &Scalar, b: &Scalar) -> std::cmp::Ordering {
    match (a.rational_parts(), b.rational_parts()) {
        (Some(x), Some(y)) => x.cmp(&y),
        _ => a.residue().cmp(&b.residue()),
    }
}

fn rational_candidates(c: &[Scalar]) -> Result<Vec<Scalar>> {
    let rs: Vec<BigRational> = c.iter().map(|x| x.rational_parts().unwrap().0).collect();
    let l = lcm_denoms(rs.iter());
    let ints: Vec<BigInt> = rs
        .iter()
        .map(|r| (r * BigRational::from_integer(l.clone())).to_integer())
        .collect();
    let a0 = small(&ints[0])?;
    let ad = small(ints.last().unwrap())?;
    let mut out = BTreeSet::new();
    for p in divisors(a0) {
        for q in divisors(ad) {
            for s in [1, -1] {
                out.insert(BigRational::new(BigInt::from(s * p), BigInt::from(q)));
            }
        }
    }
    Ok(out.into_iter().map(Scalar::Q).collect())
}

type Gi = (i128, i128);

fn gaussian_divisors(z: Gi) -> Vec<Gi> {
    let norm = z.0 * z.0 + z.1 * z.1;
    let mut out = Vec::new();
    for m in divisors(norm) {
        for x in 0..=isqrt(m) {
            let y2 = m - x * x;
            let y = isqrt(y2);
            if y * y != y2 {
                continue;
            }
            for (a, b) in [(x, y), (-x, y), (x, -y), (-x, -y)] {
                // z / (a+bi) = z·(a−bi) / m
                let re = z.0 * a + z.1 * b;
                let im = z.1 * a - z.0 * b;
                if re % m == 0 && im % m == 0 && !out.contains(&(a, b)) {
                    out.push((a, b));
                }
            }
        }
    }
    out
}

fn gaussian_candidates(c: &[Scalar]) -> Result<Vec<Scalar>> {
    let parts: Vec<(BigRational, BigRational)> =
        c.iter().map(|x| x.rational_parts().unwrap()).collect();
    let l = lcm_denoms(parts.iter().flat_map(|(a, b)| [a, b]));
    let lr = BigRational::from_integer(l);
    let gi = |(a, b): &(BigRational, BigRational)| -> Result<Gi> {
        Ok((
            small(&(a * &lr).to_integer())?,
            small(&(b * &lr).to_integer())?,
        ))
    };
    let a0 = gi(&parts[0])?;
    let ad = gi(parts.last().unwrap())?;
    for z in [a0, ad] {
        if z.0.abs() > 1_000_000 || z.1.abs() > 1_000_000 {
            return Err(scope("Gaussian coefficient too large to factor".into()));
        }
    }
    let num = gaussian_divisors(a0);
    let den: Vec<Gi> = gaussian_divisors(ad)
        .into_iter()
        .filter(|&(a, b)| a > 0 && b >= 0)
        .collect();
    let mut out = Vec::new();
    for &(pa, pb) in &num {
        for &(qa, qb) in &den {
            let p = Scalar::Qi(
                BigRational::from_integer(pa.into()),
                BigRational::from_integer(pb.into()),
            );
            let q = Scalar::Qi(
                BigRational::from_integer(qa.into()),
                BigRational::from_integer(qb.into()),
            );
            let x = p.div(&q).unwrap();
            if !out.contains(&x) {
                out.push(x);
            }
        }
    }
    Ok(out)
}

/// Polynomials over GF(p) with `u64` residues, ascending order, no trailing zeros.
pub mod gfp {
    pub fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        trim(out)
    }

    fn inv(x: u64, p: u64) -> u64 {
        let mut r = 1u64;
        let (mut b, mut e) = (x % p, p - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    }

    /// Remainder of `a` modulo a nonzero `m`.
    pub fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let mut r = trim(a.to_vec());
        let m = trim(m.to_vec());
        let lead_inv = inv(*m.last().unwrap(), p);
        while r.len() >= m.len() {
            let shift = r.len() - m.len();
            let f = r.last().unwrap() * lead_inv % p;
            for (i, c) in m.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - f * c % p) % p;
            }
            r = trim(r);
        }
        r
    }

    /// All monic polynomials of the given degree, in lexicographic order.
    pub fn monic_of_degree(d: usize, p: u64) -> Vec<Vec<u64>> {
        let total = p.pow(d as u32);
        (0..total)
            .map(|mut k| {
                let mut c = Vec::with_capacity(d + 1);
                for _ in 0..d {
                    c.push(k % p);
                    k /= p;
                }
                c.push(1);
                c
            })
            .collect()
    }

    /// Exhaustive factor scan; `Some(factor)` if reducible.
    pub fn find_factor(f: &[u64], p: u64) -> Option<Vec<u64>> {
        let deg = f.len() - 1;
        (1..=deg / 2)
            .flat_map(|d| monic_of_degree(d, p))
            .find(|g| rem(f, g, p).is_empty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Field::Q.int(x)).collect()
    }

    #[test]
    fn rational_roots() {
        // (x − 1)(2x + 3) x = 2x³ + x² − 3x
        let r = roots_in_field(&q(&[0, -3, 1, 2])).unwrap();
        assert_eq!(
            r,
            vec![Field::Q.ratio(-3, 2), Field::Q.zero(), Field::Q.one()]
        );
        assert!(roots_in_field(&q(&[1, 0, 1])).unwrap().is_empty());
    }

    #[test]
    fn gaussian_roots_of_x2_plus_1() {
        let f = Field::Qi;
        let c = vec![f.one(), f.zero(), f.one()];
        let r = roots_in_field(&c).unwrap();
        let i = f.i().unwrap();
        assert_eq!(r, vec![-&i, i]);
        let c = vec![f.parse("-1/4").unwrap(), f.zero(), f.one()];
        assert_eq!(roots_in_field(&c).unwrap().len(), 2);
    }

    #[test]
    fn prime_field_roots() {
        let f = Field::Fp(5);
        let c = vec![f.int(1), f.zero(), f.one()];
        assert_eq!(roots_in_field(&c).unwrap(), vec![f.int(2), f.int(3)]);
    }

    #[test]
    fn huge_coefficients_exceed_scope() {
        let c = vec![
            Field::Q.parse("1000000000000000000000007").unwrap(),
            Field::Q.zero(),
            Field::Q.one(),
        ];
        assert!(matches!(roots_in_field(&c), Err(Error::SolverScope(_))));
    }

    #[test]
    fn gf2_irreducibility() {
        assert!(gfp::find_factor(&[1, 1, 1], 2).is_none());
        assert!(gfp::find_factor(&[1, 1, 0, 1], 2).is_none());
        assert_eq!(gfp::find_factor(&[1, 0, 1], 2), Some(vec![1, 1]));
    }
}
