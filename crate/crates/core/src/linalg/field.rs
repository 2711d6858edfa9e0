//! Exact scalar fields: the rationals and prime fields.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::matrix::SparseVec;

/// An exact field.
///
/// Every computation in the crate is generic over this trait, so no floating
/// point value is ever produced.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Option<Self>;
    fn from_i64(v: i64) -> Self;
    /// `None` when the denominator vanishes in this field.
    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self>;
    /// A numerator/denominator pair; prime-field elements use their canonical
    /// residue over `1`.
    fn to_ratio(&self) -> (BigInt, BigInt);
    /// `0` for the rationals.
    fn characteristic() -> u64;
    /// Field label used in files and reports: `"Q"` or the prime.
    fn label() -> String;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Rank of the span of `cols`, each a sparse vector of length `nrows`.
    fn column_rank(cols: &[SparseVec<Self>], nrows: usize) -> usize {
        let _ = nrows;
        super::subspace::Subspace::spanned_by(nrows, cols.iter().cloned()).dim()
    }
}

/// Rational numbers with arbitrary-precision numerator and denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for Rational {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Rational(self.0 + o.0)
    }
}
impl Sub for Rational {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Rational(self.0 - o.0)
    }
}
impl Mul for Rational {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Rational(self.0 * o.0)
    }
}
impl Neg for Rational {
    type Output = Self;
    fn neg(self) -> Self {
        Rational(-self.0)
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn one() -> Self {
        Rational(BigRational::one())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }
    fn from_i64(v: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }
    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self> {
        if den.is_zero() {
            None
        } else {
            Some(Rational(BigRational::new(num.clone(), den.clone())))
        }
    }
    fn to_ratio(&self) -> (BigInt, BigInt) {
        (self.0.numer().clone(), self.0.denom().clone())
    }
    fn characteristic() -> u64 {
        0
    }
    fn label() -> String {
        "Q".to_string()
    }

    /// Fraction-free elimination: columns are scaled to primitive integer
    /// vectors and reduced by cross-multiplication, dividing out the content
    /// after every step so coefficients stay small.
    fn column_rank(cols: &[SparseVec<Self>], _nrows: usize) -> usize {
        let mut pivots: Vec<(usize, Vec<(usize, BigInt)>)> = Vec::new();
        for col in cols {
            let mut v = primitive_integer_vector(col);
            while let Some(&(lead, _)) = v.first() {
                match pivots.binary_search_by(|(p, _)| p.cmp(&lead)) {
                    Ok(k) => {
                        let row = &pivots[k].1;
                        let a = row[0].1.clone();
                        let b = v[0].1.clone();
                        // v <- a*v - b*row, which cancels the leading entry
                        v = integer_combination(&a, &v, &b, row);
                        make_primitive(&mut v);
                    }
                    Err(k) => {
                        pivots.insert(k, (lead, v));
                        break;
                    }
                }
            }
        }
        pivots.len()
    }
}

fn primitive_integer_vector(col: &SparseVec<Rational>) -> Vec<(usize, BigInt)> {
    let mut lcm = BigInt::one();
    for (_, x) in col {
        lcm = lcm.lcm(x.0.denom());
    }
    let mut v: Vec<(usize, BigInt)> = col
        .iter()
        .map(|(i, x)| (*i, x.0.numer() * (&lcm / x.0.denom())))
        .collect();
    make_primitive(&mut v);
    v
}

fn make_primitive(v: &mut [(usize, BigInt)]) {
    let mut g = BigInt::zero();
    for (_, x) in v.iter() {
        g = g.gcd(x);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for (_, x) in v.iter_mut() {
        *x = &*x / &g;
    }
}

fn integer_combination(
    a: &BigInt,
    v: &[(usize, BigInt)],
    b: &BigInt,
    w: &[(usize, BigInt)],
) -> Vec<(usize, BigInt)> {
    let mut out = Vec::with_capacity(v.len() + w.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < w.len() {
        let take_v = j >= w.len() || (i < v.len() && v[i].0 < w[j].0);
        let take_w = i >= v.len() || (j < w.len() && w[j].0 < v[i].0);
        let (idx, val) = if take_v {
            let r = (v[i].0, a * &v[i].1);
            i += 1;
            r
        } else if take_w {
            let r = (w[j].0, -(b * &w[j].1));
            j += 1;
            r
        } else {
            let r = (v[i].0, a * &v[i].1 - b * &w[j].1);
            i += 1;
            j += 1;
            r
        };
        if !val.is_zero() {
            out.push((idx, val));
        }
    }
    out
}

/// Residues modulo the prime `P`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u64>(pub u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self.0 as u128;
        let mut acc: u128 = 1;
        let p = P as u128;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        Fp(acc as u64)
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Fp(((self.0 as u128 + o.0 as u128) % P as u128) as u64)
    }
}
impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Fp(((self.0 as u128 + P as u128 - o.0 as u128) % P as u128) as u64)
    }
}
impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Fp(((self.0 as u128 * o.0 as u128) % P as u128) as u64)
    }
}
impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1 % P)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }
    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }
    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self> {
        let p = BigInt::from(P);
        let n = num.mod_floor(&p).to_u64()?;
        let d = den.mod_floor(&p).to_u64()?;
        Fp::<P>(d).inv().map(|di| Fp::<P>(n) * di)
    }
    fn to_ratio(&self) -> (BigInt, BigInt) {
        (BigInt::from(self.0), BigInt::one())
    }
    fn characteristic() -> u64 {
        P
    }
    fn label() -> String {
        P.to_string()
    }
}

/// Deterministic primality test for the moduli accepted on the command line.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `x` as a signed machine integer, when it is one.
pub fn as_small_integer<F: Field>(x: &F) -> Option<i64> {
    let (n, d) = x.to_ratio();
    if d.is_one() {
        n.to_i64()
    } else if d == -BigInt::one() {
        (-n).to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type F7 = Fp<7>;

    #[test]
    fn prime_field_inverse() {
        for v in 1..7 {
            let x = F7::new(v);
            assert_eq!(x * x.inv().unwrap(), F7::one());
        }
        assert!(F7::zero().inv().is_none());
    }

    #[test]
    fn ratio_into_prime_field() {
        let x = F7::from_ratio(&BigInt::from(1), &BigInt::from(2)).unwrap();
        assert_eq!(x * F7::new(2), F7::one());
        assert!(F7::from_ratio(&BigInt::from(1), &BigInt::from(14)).is_none());
    }

    #[test]
    fn rational_arithmetic() {
        let a = Rational::new(1, 3);
        let b = Rational::new(1, 6);
        assert_eq!(a.clone() + b.clone(), Rational::new(1, 2));
        assert_eq!(a * b.inv().unwrap(), Rational::from_i64(2));
    }

    #[test]
    fn primes() {
        assert!(is_prime(2) && is_prime(32003) && !is_prime(1) && !is_prime(91));
    }
}
