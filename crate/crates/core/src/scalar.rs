//! Exact coefficient domains: `Q`, `Z[1/2]` and prime fields `F_p`.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact commutative coefficient ring.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + 'static
{
    /// Short name used in reports, e.g. `q`, `zhalf`, `f5`.
    fn domain_name() -> String;
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    /// Image of a rational number, if the domain contains it.
    fn from_ratio(q: &BigRational) -> Option<Self>;
    fn is_zero(&self) -> bool;
    /// `self / other` when the quotient lies in the domain.
    fn checked_div(&self, other: &Self) -> Option<Self>;
    /// Whether the value is a rational with power-of-two denominator.
    fn is_dyadic(&self) -> bool;
    /// The value as a rational number, for domains inside `Q`.
    fn to_ratio(&self) -> Option<BigRational> {
        None
    }

    fn half() -> Option<Self> {
        Self::one().checked_div(&Self::from_i64(2))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }
}

fn is_power_of_two(d: &BigInt) -> bool {
    d.is_positive() && (d & (d - BigInt::one())).is_zero()
}

impl Scalar for BigRational {
    fn domain_name() -> String {
        "q".into()
    }
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(v.into())
    }
    fn from_ratio(q: &BigRational) -> Option<Self> {
        Some(q.clone())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn checked_div(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            None
        } else {
            Some(self / other)
        }
    }
    fn is_dyadic(&self) -> bool {
        is_power_of_two(self.denom())
    }
    fn to_ratio(&self) -> Option<BigRational> {
        Some(self.clone())
    }
}

/// Rationals whose denominator is a power of two.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Dyadic(BigRational);

impl Dyadic {
    pub fn new(q: BigRational) -> Option<Dyadic> {
        is_power_of_two(q.denom()).then_some(Dyadic(q))
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for Dyadic {
    type Output = Dyadic;
    fn add(self, o: Dyadic) -> Dyadic {
        Dyadic(self.0 + o.0)
    }
}

impl AddAssign for Dyadic {
    fn add_assign(&mut self, o: Dyadic) {
        self.0 += o.0;
    }
}

impl Sub for Dyadic {
    type Output = Dyadic;
    fn sub(self, o: Dyadic) -> Dyadic {
        Dyadic(self.0 - o.0)
    }
}

impl Mul for Dyadic {
    type Output = Dyadic;
    fn mul(self, o: Dyadic) -> Dyadic {
        Dyadic(self.0 * o.0)
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic(-self.0)
    }
}

impl Scalar for Dyadic {
    fn domain_name() -> String {
        "zhalf".into()
    }
    fn zero() -> Self {
        Dyadic(Zero::zero())
    }
    fn one() -> Self {
        Dyadic(One::one())
    }
    fn from_i64(v: i64) -> Self {
        Dyadic(BigRational::from_integer(v.into()))
    }
    fn from_ratio(q: &BigRational) -> Option<Self> {
        Dyadic::new(q.clone())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.0)
    }
    fn checked_div(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(&other.0) {
            return None;
        }
        Dyadic::new(&self.0 / &other.0)
    }
    fn is_dyadic(&self) -> bool {
        true
    }
    fn to_ratio(&self) -> Option<BigRational> {
        Some(self.0.clone())
    }
}

/// The prime field `F_P`, `P` odd. Printed with the symmetric representative.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp<const P: u64>(u64);

/// The Mersenne prime `2^61 - 1`, used for fast rank certificates.
pub const MERSENNE61: u64 = (1 << 61) - 1;

impl<const P: u64> Fp<P> {
    pub fn new(v: i128) -> Fp<P> {
        Fp(v.rem_euclid(P as i128) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn inv(self) -> Option<Fp<P>> {
        if self.0 == 0 {
            return None;
        }
        let (mut base, mut e, mut acc) = (self, P - 2, Fp::<P>(1));
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        Some(acc)
    }

    fn from_bigint(v: &BigInt) -> Fp<P> {
        let r = v.mod_floor(&BigInt::from(P));
        Fp(r.to_u64().expect("reduced residue fits"))
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 > P / 2 {
            write!(f, "-{}", P - self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Fp<P>;
    fn add(self, o: Fp<P>) -> Fp<P> {
        let s = self.0 as u128 + o.0 as u128;
        Fp((s % P as u128) as u64)
    }
}

impl<const P: u64> AddAssign for Fp<P> {
    fn add_assign(&mut self, o: Fp<P>) {
        *self = *self + o;
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Fp<P>;
    fn sub(self, o: Fp<P>) -> Fp<P> {
        self + (-o)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Fp<P>;
    fn mul(self, o: Fp<P>) -> Fp<P> {
        Fp(((self.0 as u128 * o.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Fp<P>;
    fn neg(self) -> Fp<P> {
        if self.0 == 0 {
            self
        } else {
            Fp(P - self.0)
        }
    }
}

impl<const P: u64> Scalar for Fp<P> {
    fn domain_name() -> String {
        format!("f{P}")
    }
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1 % P)
    }
    fn from_i64(v: i64) -> Self {
        Fp::new(v as i128)
    }
    fn from_ratio(q: &BigRational) -> Option<Self> {
        let d = Fp::<P>::from_bigint(q.denom()).inv()?;
        Some(Fp::<P>::from_bigint(q.numer()) * d)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn checked_div(&self, other: &Self) -> Option<Self> {
        Some(*self * other.inv()?)
    }
    fn is_dyadic(&self) -> bool {
        false
    }
}

/// Parse a rational like `-3/4` or `5`.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((a, b)) => {
            let (a, b): (BigInt, BigInt) = (a.trim().parse().ok()?, b.trim().parse().ok()?);
            (!b.is_zero()).then(|| BigRational::new(a, b))
        }
        None => Some(BigRational::from_integer(s.trim().parse().ok()?)),
    }
}

/// `Q`.
pub type Rational = BigRational;

/// Coefficient domain selected at run time.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoeffDomain {
    Q,
    ZHalf,
    Fp(u64),
}

impl fmt::Display for CoeffDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffDomain::Q => f.write_str("q"),
            CoeffDomain::ZHalf => f.write_str("zhalf"),
            CoeffDomain::Fp(p) => write!(f, "f{p}"),
        }
    }
}

impl std::str::FromStr for CoeffDomain {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "q" => Ok(CoeffDomain::Q),
            "zhalf" => Ok(CoeffDomain::ZHalf),
            _ => {
                let p: u64 = s
                    .strip_prefix('f')
                    .and_then(|p| p.parse().ok())
                    .ok_or_else(|| crate::Error::Parse(format!("unknown coefficient domain {s:?}")))?;
                if !SUPPORTED_PRIMES.contains(&p) {
                    return Err(crate::Error::Parse(format!("f{p}: need an odd prime from {SUPPORTED_PRIMES:?}")));
                }
                Ok(CoeffDomain::Fp(p))
            }
        }
    }
}

/// Run `$body` with the type alias `$t` bound to the scalar type of `$dom`.
#[macro_export]
macro_rules! with_scalar {
    ($dom:expr, $t:ident => $body:expr) => {{
        use $crate::scalar::{CoeffDomain, Dyadic, Fp, Rational};
        match $dom {
            CoeffDomain::Q => {
                type $t = Rational;
                $body
            }
            CoeffDomain::ZHalf => {
                type $t = Dyadic;
                $body
            }
            CoeffDomain::Fp(p) => $crate::with_scalar!(@fp p, $t => $body;
                3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 97, 101, 1009, 10007),
        }
    }};
    (@fp $p:ident, $t:ident => $body:expr; $($q:literal),*) => {
        match $p {
            $($q => {
                type $t = Fp<$q>;
                $body
            })*
            _ => unreachable!("prime was validated when parsed"),
        }
    };
}

/// Small odd primes accepted by the `f<p>` coefficient flag.
pub const SUPPORTED_PRIMES: &[u64] = &[3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 97, 101, 1009, 10007];
