use alloc::string::String;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::UniPoly;
use crate::error::{Error, Result};
use crate::BigRational;

/// An element of `Q(N)` in canonical form: monic denominator, coprime parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: UniPoly,
    den: UniPoly,
}

impl RationalFunction {
    pub fn zero() -> Self {
        RationalFunction {
            num: UniPoly::zero(),
            den: UniPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(UniPoly::from_int(c))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    pub fn from_poly(num: UniPoly) -> Self {
        RationalFunction {
            num,
            den: UniPoly::one(),
        }
    }

    /// Reduces `num / den` to canonical form.
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: UniPoly, den: UniPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = UniPoly::gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.div_exact(&g).expect("gcd divides"),
                    den.div_exact(&g).expect("gcd divides"),
                )
            }
        };
        let lc = den.leading_coeff();
        if lc.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = lc.recip();
            RationalFunction {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    /// The polynomial itself when the denominator is 1.
    pub fn as_poly(&self) -> Option<&UniPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn mul_poly(&self, p: &UniPoly) -> Self {
        Self::canonical(&self.num * p, self.den.clone())
    }

    /// `deg num - deg den` (`None` for zero).
    pub fn valuation_at_infinity(&self) -> Option<i64> {
        Some(self.num.degree()? as i64 - self.den.degree().unwrap_or(0) as i64)
    }

    /// Value at `N = n`; a vanishing denominator is a pole error.
    pub fn eval_int(&self, n: i64) -> Result<BigRational> {
        let d = self.den.eval_int(n);
        if d.is_zero() {
            return Err(Error::Pole(n));
        }
        Ok(self.num.eval_int(n) / d)
    }

    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::Pole(x.to_integer().try_into().unwrap_or(i64::MAX)));
        }
        Ok(self.num.eval(x) / d)
    }

    /// True when the numerator's leading coefficient is negative.
    pub fn is_negative_leading(&self) -> bool {
        self.num.leading_coeff().is_negative()
    }

    /// Rendering as `num/den` with an integer numerator and the denominator
    /// factored, e.g. `(N^2 - N)/(4(N - 2))`. Polynomials print bare.
    pub fn render(&self) -> String {
        let (content, prim) = self.num.primitive_part();
        let b = content.denom().clone();
        if self.den.is_one() && b.is_one() {
            return self.num.render();
        }
        let a = BigRational::from_integer(content.numer().clone());
        let num_poly = UniPoly::from_coeffs(
            prim.into_iter()
                .map(|c| BigRational::from_integer(c) * &a)
                .collect(),
        );
        let num = if num_poly.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
            alloc::format!("({})", num_poly.render())
        } else {
            num_poly.render()
        };
        let den_poly = self.den.scale(&BigRational::from_integer(b.clone()));
        let (roots, rest) = self.den.split_integer_roots(64);
        let single_factor = if self.den.is_one() {
            true
        } else {
            b.is_one()
                && ((roots.len() == 1 && rest.is_one())
                    || (roots.is_empty() && self.den.coeffs().iter().filter(|c| !c.is_zero()).count() == 1))
        };
        let den = if single_factor {
            den_poly.render_factored()
        } else {
            alloc::format!("({})", den_poly.render_factored())
        };
        alloc::format!("{num}/{den}")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::canonical(&self.num + &rhs.num, self.den.clone());
        }
        let g = UniPoly::gcd(&self.den, &rhs.den);
        let a_den = self.den.div_exact(&g).expect("gcd divides");
        let b_den = rhs.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &b_den) + &(&rhs.num * &a_den);
        RationalFunction::canonical(num, &a_den * &rhs.den)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunction::from_poly(&self.num * &rhs.num);
        }
        // cross-cancel before multiplying to keep degrees small
        let g1 = UniPoly::gcd(&self.num, &rhs.den);
        let g2 = UniPoly::gcd(&rhs.num, &self.den);
        let a_num = self.num.div_exact(&g1).expect("gcd divides");
        let b_den = rhs.den.div_exact(&g1).expect("gcd divides");
        let b_num = rhs.num.div_exact(&g2).expect("gcd divides");
        let a_den = self.den.div_exact(&g2).expect("gcd divides");
        let num = &a_num * &b_num;
        let den = &a_den * &b_den;
        let lc = den.leading_coeff();
        let inv = lc.recip();
        RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<UniPoly> for RationalFunction {
    fn from(p: UniPoly) -> Self {
        RationalFunction::from_poly(p)
    }
}

impl From<i64> for RationalFunction {
    fn from(c: i64) -> Self {
        RationalFunction::from_int(c)
    }
}

impl From<BigInt> for RationalFunction {
    fn from(c: BigInt) -> Self {
        RationalFunction::from_rational(BigRational::from_integer(c))
    }
}
