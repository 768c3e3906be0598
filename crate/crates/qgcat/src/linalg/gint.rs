//! Gaussian integers that stay on machine words until they overflow.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// `re + im·i`. The `Big` variant is only used when a part does not fit in
/// an `i64`, which keeps equality and hashing structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) enum GInt {
    Small(i64, i64),
    Big(Box<(BigInt, BigInt)>),
}

fn narrow(re: i128, im: i128) -> GInt {
    match (i64::try_from(re), i64::try_from(im)) {
        (Ok(a), Ok(b)) => GInt::Small(a, b),
        _ => GInt::Big(Box::new((BigInt::from(re), BigInt::from(im)))),
    }
}

fn from_big(re: BigInt, im: BigInt) -> GInt {
    match (re.to_i64(), im.to_i64()) {
        (Some(a), Some(b)) => GInt::Small(a, b),
        _ => GInt::Big(Box::new((re, im))),
    }
}

impl GInt {
    pub const ZERO: GInt = GInt::Small(0, 0);
    pub const ONE: GInt = GInt::Small(1, 0);

    pub fn new(re: BigInt, im: BigInt) -> GInt {
        from_big(re, im)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, GInt::Small(0, 0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, GInt::Small(1, 0))
    }

    pub fn parts(&self) -> (BigInt, BigInt) {
        match self {
            GInt::Small(a, b) => (BigInt::from(*a), BigInt::from(*b)),
            GInt::Big(p) => (p.0.clone(), p.1.clone()),
        }
    }

    pub fn add(&self, o: &GInt) -> GInt {
        match (self, o) {
            (GInt::Small(a, b), GInt::Small(c, d)) => {
                match (a.checked_add(*c), b.checked_add(*d)) {
                    (Some(x), Some(y)) => GInt::Small(x, y),
                    _ => narrow(*a as i128 + *c as i128, *b as i128 + *d as i128),
                }
            }
            _ => {
                let (a, b) = self.parts();
                let (c, d) = o.parts();
                from_big(a + c, b + d)
            }
        }
    }

    pub fn sub(&self, o: &GInt) -> GInt {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> GInt {
        match self {
            GInt::Small(a, b) if *a != i64::MIN && *b != i64::MIN => GInt::Small(-a, -b),
            _ => {
                let (a, b) = self.parts();
                from_big(-a, -b)
            }
        }
    }

    pub fn conj(&self) -> GInt {
        match self {
            GInt::Small(a, b) if *b != i64::MIN => GInt::Small(*a, -b),
            _ => {
                let (a, b) = self.parts();
                from_big(a, -b)
            }
        }
    }

    pub fn mul(&self, o: &GInt) -> GInt {
        match (self, o) {
            (GInt::Small(a, b), GInt::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                // Products of i64 fit in i128; only the sums can overflow.
                match ((a * c).checked_sub(b * d), (a * d).checked_add(b * c)) {
                    (Some(x), Some(y)) => narrow(x, y),
                    _ => self.mul_big(o),
                }
            }
            _ => self.mul_big(o),
        }
    }

    fn mul_big(&self, o: &GInt) -> GInt {
        let (a, b) = self.parts();
        let (c, d) = o.parts();
        from_big(&a * &c - &b * &d, &a * &d + &b * &c)
    }

    /// `x·y − u·v`, the fraction-free elimination step.
    pub fn mul_sub(x: &GInt, y: &GInt, u: &GInt, v: &GInt) -> GInt {
        x.mul(y).sub(&u.mul(v))
    }

    /// Exact division by a positive rational integer dividing both parts.
    pub fn div_int(&self, g: &Content) -> GInt {
        match (self, g) {
            (_, Content::Small(1)) => self.clone(),
            (GInt::Small(a, b), Content::Small(g)) => {
                let g = *g as i128;
                narrow(*a as i128 / g, *b as i128 / g)
            }
            _ => {
                let (a, b) = self.parts();
                let g = g.to_big();
                from_big(a / &g, b / g)
            }
        }
    }

    /// Real part is positive and imaginary part zero.
    pub fn is_positive_real(&self) -> bool {
        match self {
            GInt::Small(a, b) => *a > 0 && *b == 0,
            GInt::Big(p) => p.0.is_positive() && p.1.is_zero(),
        }
    }
}

/// gcd of the rational-integer parts of a collection of Gaussian integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Content {
    Small(u128),
    Big(BigInt),
}

impl Content {
    pub fn zero() -> Content {
        Content::Small(0)
    }

    pub fn is_one(&self) -> bool {
        match self {
            Content::Small(g) => *g == 1,
            Content::Big(g) => g.is_one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Content::Small(0))
    }

    fn to_big(&self) -> BigInt {
        match self {
            Content::Small(g) => BigInt::from(*g),
            Content::Big(g) => g.clone(),
        }
    }

    fn absorb_i64(&mut self, x: i64) {
        if x == 0 {
            return;
        }
        match self {
            Content::Small(g) => *g = g.gcd(&(x.unsigned_abs() as u128)),
            Content::Big(g) => {
                *g = g.gcd(&BigInt::from(x));
                if let Some(s) = g.to_u128() {
                    *self = Content::Small(s);
                }
            }
        }
    }

    fn absorb_big(&mut self, x: &BigInt) {
        if x.is_zero() {
            return;
        }
        let g = self.to_big().gcd(x);
        *self = match g.to_u128() {
            Some(s) => Content::Small(s),
            None => Content::Big(g),
        };
    }

    pub fn absorb(&mut self, v: &GInt) {
        match v {
            GInt::Small(a, b) => {
                self.absorb_i64(*a);
                self.absorb_i64(*b);
            }
            GInt::Big(p) => {
                self.absorb_big(&p.0);
                self.absorb_big(&p.1);
            }
        }
    }
}
