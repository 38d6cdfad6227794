//! Exact scalars over Q, Q(i) and prime fields.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The working field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Field {
    /// The rationals.
    Q,
    /// The Gaussian rationals Q(i).
    Qi,
    /// GF(p) for a prime p.
    Fp(u64),
}

/// An element of a [`Field`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Qi(BigRational, BigRational),
    /// Residue and modulus.
    Fp(u64, u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    r
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("invalid rational '{s}'"));
    let s = s.trim();
    if s.is_empty() {
        return Err(bad());
    }
    let s = s.strip_prefix('+').unwrap_or(s);
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in '{s}'")));
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl Field {
    /// GF(p), rejecting composite moduli.
    pub fn fp(p: u64) -> Result<Field> {
        if p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::Input(format!(
                "{p} is not a supported prime modulus"
            )));
        }
        Ok(Field::Fp(p))
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Q => Scalar::Q(BigRational::zero()),
            Field::Qi => Scalar::Qi(BigRational::zero(), BigRational::zero()),
            Field::Fp(p) => Scalar::Fp(0, p),
        }
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    pub fn int(self, n: i64) -> Scalar {
        match self {
            Field::Q => Scalar::Q(BigRational::from_integer(n.into())),
            Field::Qi => Scalar::Qi(BigRational::from_integer(n.into()), BigRational::zero()),
            Field::Fp(p) => Scalar::Fp(n.rem_euclid(p as i64) as u64, p),
        }
    }

    /// The rational number `n/d` mapped into the field.
    pub fn ratio(self, n: i64, d: i64) -> Scalar {
        assert!(d != 0, "zero denominator");
        self.int(n)
            .div(&self.int(d))
            .expect("denominator vanishes in the field")
    }

    pub fn from_rational(self, r: &BigRational) -> Result<Scalar> {
        match self {
            Field::Q => Ok(Scalar::Q(r.clone())),
            Field::Qi => Ok(Scalar::Qi(r.clone(), BigRational::zero())),
            Field::Fp(p) => {
                let pb = BigInt::from(p);
                let n = r.numer().mod_floor(&pb).to_u64().unwrap();
                let d = r.denom().mod_floor(&pb).to_u64().unwrap();
                if d == 0 {
                    return Err(Error::Parse(format!("denominator of {r} vanishes mod {p}")));
                }
                Scalar::Fp(n, p)
                    .div(&Scalar::Fp(d, p))
                    .ok_or_else(|| Error::Parse(r.to_string()))
            }
        }
    }

    /// The imaginary unit; only defined over Q(i).
    pub fn i(self) -> Option<Scalar> {
        match self {
            Field::Qi => Some(Scalar::Qi(BigRational::zero(), BigRational::one())),
            _ => None,
        }
    }

    /// Parses the scalar text syntax: `n/d`, `n`, `a+b*i` (either part omissible).
    pub fn parse(self, text: &str) -> Result<Scalar> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        match self {
            Field::Q => Ok(Scalar::Q(parse_rational(&s)?)),
            Field::Fp(_) => self.from_rational(&parse_rational(&s)?),
            Field::Qi => {
                let Some(body) = s.strip_suffix('i') else {
                    return Ok(Scalar::Qi(parse_rational(&s)?, BigRational::zero()));
                };
                let split = body
                    .char_indices()
                    .filter(|&(k, c)| k > 0 && (c == '+' || c == '-'))
                    .map(|(k, _)| k)
                    .next_back();
                let (re, im) = match split {
                    Some(k) => (&body[..k], &body[k..]),
                    None => ("0", body),
                };
                let im = im.strip_suffix('*').unwrap_or(im);
                let im = match im {
                    "" | "+" => BigRational::one(),
                    "-" => -BigRational::one(),
                    t => parse_rational(t)?,
                };
                Ok(Scalar::Qi(parse_rational(re)?, im))
            }
        }
    }

    /// Text form used in report headers and on the command line.
    pub fn label(self) -> String {
        match self {
            Field::Q => "Q".into(),
            Field::Qi => "Qi".into(),
            Field::Fp(p) => format!("Fp:{p}"),
        }
    }

    /// Parses `Q`, `Qi` or `Fp:<p>`.
    pub fn from_label(s: &str) -> Result<Field> {
        match s {
            "Q" => Ok(Field::Q),
            "Qi" => Ok(Field::Qi),
            _ => {
                let p = s
                    .strip_prefix("Fp:")
                    .and_then(|t| t.parse::<u64>().ok())
                    .ok_or_else(|| Error::Input(format!("unknown field '{s}'")))?;
                Field::fp(p)
            }
        }
    }

    /// Number of elements, for finite fields.
    pub fn order(self) -> Option<u64> {
        match self {
            Field::Fp(p) => Some(p),
            _ => None,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Q,
            Scalar::Qi(..) => Field::Qi,
            Scalar::Fp(_, p) => Field::Fp(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Qi(a, b) => a.is_zero() && b.is_zero(),
            Scalar::Fp(r, _) => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::Qi(a, b) => a.is_one() && b.is_zero(),
            Scalar::Fp(r, _) => *r == 1,
        }
    }

    fn mismatch(&self, other: &Scalar) -> ! {
        panic!("field mismatch: {} vs {}", self.field(), other.field())
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Q(r) => Scalar::Q(r.recip()),
            Scalar::Qi(a, b) => {
                let n = a * a + b * b;
                Scalar::Qi(a / &n, -(b / &n))
            }
            Scalar::Fp(r, p) => Scalar::Fp(mod_pow(*r, p - 2, *p), *p),
        })
    }

    pub fn div(&self, other: &Scalar) -> Option<Scalar> {
        other.inv().map(|o| self * &o)
    }

    /// Complex conjugate over Q(i); identity elsewhere.
    pub fn conj(&self) -> Scalar {
        match self {
            Scalar::Qi(a, b) => Scalar::Qi(a.clone(), -b),
            s => s.clone(),
        }
    }

    pub fn pow(&self, e: u64) -> Scalar {
        let mut r = self.field().one();
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    /// Real and imaginary rational parts (the imaginary part is zero outside Q(i)).
    pub fn rational_parts(&self) -> Option<(BigRational, BigRational)> {
        match self {
            Scalar::Q(r) => Some((r.clone(), BigRational::zero())),
            Scalar::Qi(a, b) => Some((a.clone(), b.clone())),
            Scalar::Fp(..) => None,
        }
    }

    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Fp(r, _) => Some(*r),
            _ => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => f.write_str(&fmt_rational(r)),
            Scalar::Fp(r, _) => write!(f, "{r}"),
            Scalar::Qi(a, b) => {
                if b.is_zero() {
                    return f.write_str(&fmt_rational(a));
                }
                let im = if b.is_one() {
                    "i".to_string()
                } else if (-b).is_one() {
                    "-i".to_string()
                } else {
                    format!("{}*i", fmt_rational(b))
                };
                if a.is_zero() {
                    f.write_str(&im)
                } else if b.is_positive() {
                    write!(f, "{}+{}", fmt_rational(a), im)
                } else {
                    write!(f, "{}{}", fmt_rational(a), im)
                }
            }
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Qi(a, b), Scalar::Qi(c, d)) => Scalar::Qi(a + c, b + d),
            (Scalar::Fp(a, p), Scalar::Fp(b, q)) if p == q => Scalar::Fp((a + b) % p, *p),
            _ => self.mismatch(o),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a - b),
            (Scalar::Qi(a, b), Scalar::Qi(c, d)) => Scalar::Qi(a - c, b - d),
            (Scalar::Fp(a, p), Scalar::Fp(b, q)) if p == q => Scalar::Fp((a + p - b) % p, *p),
            _ => self.mismatch(o),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Qi(a, b), Scalar::Qi(c, d)) => {
                if b.is_zero() && d.is_zero() {
                    Scalar::Qi(a * c, BigRational::zero())
                } else {
                    Scalar::Qi(a * c - b * d, a * d + b * c)
                }
            }
            (Scalar::Fp(a, p), Scalar::Fp(b, q)) if p == q => {
                Scalar::Fp(((*a as u128 * *b as u128) % *p as u128) as u64, *p)
            }
            _ => self.mismatch(o),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Qi(a, b) => Scalar::Qi(-a, -b),
            Scalar::Fp(a, p) => Scalar::Fp((p - a) % p, *p),
        }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["0", "3", "-7/4", "1/2+3/4*i", "-i", "i", "2-5*i", "-1/3*i"] {
            let x = Field::Qi.parse(s).unwrap();
            assert_eq!(Field::Qi.parse(&x.to_string()).unwrap(), x, "{s}");
        }
        assert_eq!(Field::Qi.parse("i").unwrap(), Field::Qi.i().unwrap());
        assert_eq!(Field::Q.parse("6/4").unwrap().to_string(), "3/2");
        assert_eq!(Field::Fp(7).parse("-1").unwrap(), Scalar::Fp(6, 7));
        assert_eq!(Field::Fp(7).parse("1/2").unwrap(), Scalar::Fp(4, 7));
    }

    #[test]
    fn gaussian_arithmetic() {
        let i = Field::Qi.i().unwrap();
        assert_eq!(&i * &i, Field::Qi.int(-1));
        let z = Field::Qi.parse("1+2*i").unwrap();
        assert!((&z * &z.inv().unwrap()).is_one());
        assert_eq!(z.conj(), Field::Qi.parse("1-2*i").unwrap());
    }

    #[test]
    fn prime_field_inverse() {
        let f = Field::fp(7).unwrap();
        for n in 1..7 {
            assert!((&f.int(n) * &f.int(n).inv().unwrap()).is_one());
        }
        assert!(Field::fp(9).is_err());
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn mixed_fields_panic() {
        let _ = &Field::Q.one() + &Field::Fp(5).one();
    }

    #[test]
    fn field_labels() {
        for f in [Field::Q, Field::Qi, Field::Fp(13)] {
            assert_eq!(Field::from_label(&f.label()).unwrap(), f);
        }
        assert!(Field::from_label("Fp:4").is_err());
    }
}
