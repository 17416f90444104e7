use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{ArithError, Rational};

/// Variable tags. `A` is the terminal variable of all conversions; `x` (the
/// Potts Boltzmann factor) is deliberately disconnected from the rest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    A,
    SmallQ,
    D,
    BigQ,
    X,
}

impl Var {
    pub fn symbol(self) -> &'static str {
        match self {
            Var::A => "A",
            Var::SmallQ => "q",
            Var::D => "d",
            Var::BigQ => "Q",
            Var::X => "x",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Var> {
        match s {
            "A" => Some(Var::A),
            "q" => Some(Var::SmallQ),
            "d" => Some(Var::D),
            "Q" => Some(Var::BigQ),
            "x" => Some(Var::X),
            _ => None,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Univariate Laurent polynomial with exact rational coefficients, tagged by
/// its variable. Zero coefficients are never stored, so structural equality
/// is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Laurent {
    var: Var,
    terms: BTreeMap<i64, Rational>,
}

impl Laurent {
    pub fn zero(var: Var) -> Self {
        Laurent { var, terms: BTreeMap::new() }
    }

    pub fn one(var: Var) -> Self {
        Laurent::constant(var, Rational::one())
    }

    pub fn constant(var: Var, c: Rational) -> Self {
        Laurent::monomial(var, 0, c)
    }

    pub fn int(var: Var, c: i64) -> Self {
        Laurent::constant(var, super::rat(c))
    }

    /// The variable itself, `v^1`.
    pub fn gen(var: Var) -> Self {
        Laurent::monomial(var, 1, Rational::one())
    }

    pub fn monomial(var: Var, exp: i64, coeff: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Laurent { var, terms }
    }

    pub fn from_terms(var: Var, iter: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        let mut p = Laurent::zero(var);
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).map_or(false, |c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn add_term(&mut self, exp: i64, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn checked_add(&self, rhs: &Laurent) -> Result<Laurent, ArithError> {
        if self.var != rhs.var {
            return Err(ArithError::VarMismatch(self.var, rhs.var));
        }
        let mut out = self.clone();
        for (e, c) in rhs.terms.iter() {
            out.add_term(*e, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, rhs: &Laurent) -> Result<Laurent, ArithError> {
        self.checked_add(&rhs.clone().neg())
    }

    pub fn checked_mul(&self, rhs: &Laurent) -> Result<Laurent, ArithError> {
        if self.var != rhs.var {
            return Err(ArithError::VarMismatch(self.var, rhs.var));
        }
        let mut out = Laurent::zero(self.var);
        for (e1, c1) in self.terms.iter() {
            for (e2, c2) in rhs.terms.iter() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Laurent {
        if c.is_zero() {
            return Laurent::zero(self.var);
        }
        Laurent {
            var: self.var,
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// Multiply by the monomial `coeff * v^exp`.
    pub fn mul_monomial(&self, exp: i64, coeff: &Rational) -> Laurent {
        if coeff.is_zero() {
            return Laurent::zero(self.var);
        }
        Laurent {
            var: self.var,
            terms: self.terms.iter().map(|(e, k)| (e + exp, k * coeff)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Laurent {
        let mut acc = Laurent::one(self.var);
        for _ in 0..n {
            acc = acc.checked_mul(self).expect("same variable");
        }
        acc
    }

    /// Exact image under the conversion rules. Paths: `Q -> {d, q, A}`,
    /// `q -> A`, `d -> A`, and the identity. Negative exponents require the
    /// image of the source variable to be an invertible monomial.
    pub fn substitute(&self, target: Var) -> Result<Laurent, ArithError> {
        if self.var == target {
            return Ok(self.clone());
        }
        let image = match (self.var, target) {
            // Q = d^2
            (Var::BigQ, Var::D) => Laurent::monomial(Var::D, 2, Rational::one()),
            // Q = q + 2 + q^-1
            (Var::BigQ, Var::SmallQ) => Laurent::from_terms(
                Var::SmallQ,
                [(1, Rational::one()), (0, super::rat(2)), (-1, Rational::one())],
            ),
            // Q = A^4 + 2 + A^-4
            (Var::BigQ, Var::A) => Laurent::from_terms(
                Var::A,
                [(4, Rational::one()), (0, super::rat(2)), (-4, Rational::one())],
            ),
            // q = A^4
            (Var::SmallQ, Var::A) => Laurent::monomial(Var::A, 4, Rational::one()),
            // d = -A^2 - A^-2
            (Var::D, Var::A) => Laurent::from_terms(
                Var::A,
                [(2, -Rational::one()), (-2, -Rational::one())],
            ),
            (from, to) => return Err(ArithError::NoConversion(from, to)),
        };
        self.compose(&image)
    }

    /// Evaluate the polynomial at `image`, an element of another Laurent ring.
    fn compose(&self, image: &Laurent) -> Result<Laurent, ArithError> {
        let var = image.var;
        let neg_needed = self.min_exp().map_or(false, |m| m < 0);
        let inverse = if neg_needed {
            Some(image.monomial_inverse().ok_or(ArithError::NegativeExponent)?)
        } else {
            None
        };
        let mut out = Laurent::zero(var);
        for (e, c) in self.terms.iter() {
            let base = if *e >= 0 {
                image.pow(*e as u32)
            } else {
                inverse.as_ref().unwrap().pow((-e) as u32)
            };
            out = out.checked_add(&base.scale(c))?;
        }
        Ok(out)
    }

    /// Inverse of a monomial `c*v^e`, if this polynomial is one.
    fn monomial_inverse(&self) -> Option<Laurent> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        Some(Laurent::monomial(self.var, -e, c.recip()))
    }

    /// Floating evaluation; errors at 0 when negative exponents are present.
    pub fn eval_f64(&self, value: f64) -> Result<f64, ArithError> {
        if value == 0.0 && self.min_exp().map_or(false, |m| m < 0) {
            return Err(ArithError::EvalAtZero);
        }
        let mut acc = 0.0;
        for (e, c) in self.terms.iter() {
            acc += c.to_f64().unwrap_or(f64::NAN) * value.powi(*e as i32);
        }
        Ok(acc)
    }

    /// Exact evaluation at a rational point.
    pub fn eval_rational(&self, value: &Rational) -> Result<Rational, ArithError> {
        if value.is_zero() && self.min_exp().map_or(false, |m| m < 0) {
            return Err(ArithError::EvalAtZero);
        }
        let mut acc = Rational::zero();
        for (e, c) in self.terms.iter() {
            let mut p = Rational::one();
            for _ in 0..e.unsigned_abs() {
                p *= value;
            }
            if *e < 0 {
                p = p.recip();
            }
            acc += c * p;
        }
        Ok(acc)
    }

    /// Exact division in the Laurent ring; `Err(InexactDivision)` when the
    /// remainder is nonzero. Used where divisibility is a structural claim,
    /// so an inexact division signals a bug upstream.
    pub fn exact_div(&self, divisor: &Laurent) -> Result<Laurent, ArithError> {
        if self.var != divisor.var {
            return Err(ArithError::VarMismatch(self.var, divisor.var));
        }
        if divisor.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Laurent::zero(self.var));
        }
        // Shift both to ordinary polynomials and long-divide.
        let a_shift = self.min_exp().unwrap();
        let b_shift = divisor.min_exp().unwrap();
        let mut rem: BTreeMap<i64, Rational> =
            self.terms.iter().map(|(e, c)| (e - a_shift, c.clone())).collect();
        let div: BTreeMap<i64, Rational> =
            divisor.terms.iter().map(|(e, c)| (e - b_shift, c.clone())).collect();
        let (dlead, dcoef) = div.iter().next_back().map(|(e, c)| (*e, c.clone())).unwrap();
        let mut quot: BTreeMap<i64, Rational> = BTreeMap::new();
        while let Some((rlead, rcoef)) = rem.iter().next_back().map(|(e, c)| (*e, c.clone())) {
            if rlead < dlead {
                return Err(ArithError::InexactDivision);
            }
            let qe = rlead - dlead;
            let qc = rcoef / &dcoef;
            for (e, c) in div.iter() {
                let entry = rem.entry(e + qe).or_insert_with(Rational::zero);
                *entry -= c * &qc;
                if entry.is_zero() {
                    rem.remove(&(e + qe));
                }
            }
            quot.insert(qe, qc);
        }
        Ok(Laurent {
            var: self.var,
            terms: quot
                .into_iter()
                .map(|(e, c)| (e + a_shift - b_shift, c))
                .collect(),
        })
    }

    /// Machine format: `[[exponent, numerator, denominator], ...]` sorted by
    /// descending exponent, as a JSON array.
    pub fn to_machine(&self) -> String {
        let mut parts = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            parts.push(format!("[{},{},{}]", e, c.numer(), c.denom()));
        }
        format!("[{}]", parts.join(","))
    }
}

fn fmt_rational(c: &Rational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Laurent {
    /// Renders as sorted `coeff*var^exp` terms joined by `+`/`-`, with the
    /// descending exponent order, e.g. `q^1 + 1 + q^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
                first = false;
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if *e == 0 {
                f.write_str(&fmt_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}^{}", self.var, e)?;
            } else {
                write!(f, "{}*{}^{}", fmt_rational(&mag), self.var, e)?;
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for &Laurent {
            type Output = Laurent;
            fn $method(self, rhs: &Laurent) -> Laurent {
                self.$checked(rhs).expect("laurent variable mismatch")
            }
        }
        impl $trait for Laurent {
            type Output = Laurent;
            fn $method(self, rhs: Laurent) -> Laurent {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Laurent> for Laurent {
            type Output = Laurent;
            fn $method(self, rhs: &Laurent) -> Laurent {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent {
            var: self.var,
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        self.clone().neg()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};

    fn q_poly(terms: &[(i64, i64)]) -> Laurent {
        Laurent::from_terms(Var::SmallQ, terms.iter().map(|(e, c)| (*e, rat(*c))))
    }

    #[test]
    fn additive_inverse() {
        let p = Laurent::gen(Var::BigQ);
        assert!((&p + &(-&p)).is_zero());
    }

    #[test]
    fn identity_element() {
        let p = q_poly(&[(3, 2), (0, -1), (-2, 5)]);
        assert_eq!(&p * &Laurent::one(Var::SmallQ), p);
    }

    #[test]
    fn convolution_square() {
        // (q + 1 + q^-1)^2 = q^2 + 2q + 3 + 2q^-1 + q^-2
        let p = q_poly(&[(1, 1), (0, 1), (-1, 1)]);
        let expected = q_poly(&[(2, 1), (1, 2), (0, 3), (-1, 2), (-2, 1)]);
        assert_eq!(&p * &p, expected);
    }

    #[test]
    fn var_mismatch_rejected() {
        let p = Laurent::gen(Var::BigQ);
        let r = Laurent::gen(Var::D);
        assert_eq!(p.checked_add(&r), Err(ArithError::VarMismatch(Var::BigQ, Var::D)));
        assert_eq!(p.checked_mul(&r), Err(ArithError::VarMismatch(Var::BigQ, Var::D)));
    }

    #[test]
    fn substitute_big_q() {
        let q = Laurent::gen(Var::BigQ);
        let into_a = Laurent::from_terms(Var::A, [(4, rat(1)), (0, rat(2)), (-4, rat(1))]);
        assert_eq!(q.substitute(Var::A).unwrap(), into_a);

        let d = Laurent::gen(Var::D);
        let d_in_a = Laurent::from_terms(Var::A, [(2, rat(-1)), (-2, rat(-1))]);
        assert_eq!(d.substitute(Var::A).unwrap(), d_in_a);

        // d_3 = q + 1 + q^-1 -> A^4 + 1 + A^-4
        let d3 = q_poly(&[(1, 1), (0, 1), (-1, 1)]);
        let expected = Laurent::from_terms(Var::A, [(4, rat(1)), (0, rat(1)), (-4, rat(1))]);
        assert_eq!(d3.substitute(Var::A).unwrap(), expected);
    }

    #[test]
    fn substitute_no_path() {
        let p = Laurent::gen(Var::X);
        assert_eq!(p.substitute(Var::A), Err(ArithError::NoConversion(Var::X, Var::A)));
        let p = Laurent::gen(Var::SmallQ);
        assert_eq!(p.substitute(Var::D), Err(ArithError::NoConversion(Var::SmallQ, Var::D)));
    }

    #[test]
    fn substitute_negative_exponent_needs_monomial() {
        // Q^-1 has no Laurent image under Q -> q + 2 + q^-1,
        // but q^-1 -> A^-4 is fine.
        let qinv = Laurent::monomial(Var::BigQ, -1, rat(1));
        assert_eq!(qinv.substitute(Var::SmallQ), Err(ArithError::NegativeExponent));
        let small = Laurent::monomial(Var::SmallQ, -1, rat(1));
        assert_eq!(
            small.substitute(Var::A).unwrap(),
            Laurent::monomial(Var::A, -4, rat(1))
        );
    }

    #[test]
    fn eval_examples() {
        // Q(Q-1)(Q-2) at Q=3 -> 6
        let q = Laurent::gen(Var::BigQ);
        let p = &q * &(&q - &Laurent::one(Var::BigQ)) * (&q - &Laurent::int(Var::BigQ, 2));
        assert_eq!(p.eval_f64(3.0).unwrap(), 6.0);
        assert_eq!(p.eval_rational(&rat(3)).unwrap(), rat(6));

        // Q at the golden value 2 + 2cos(2*pi/5) = phi + 1
        let v = 2.0 + 2.0 * (2.0 * std::f64::consts::PI / 5.0).cos();
        let phi = (1.0 + 5.0_f64.sqrt()) / 2.0;
        assert!((q.eval_f64(v).unwrap() - (phi + 1.0)).abs() < 1e-12);

        assert_eq!(Laurent::one(Var::X).eval_f64(123.456).unwrap(), 1.0);
        assert_eq!(
            Laurent::monomial(Var::X, -1, rat(1)).eval_f64(0.0),
            Err(ArithError::EvalAtZero)
        );
    }

    #[test]
    fn exact_division() {
        let q = Laurent::gen(Var::BigQ);
        let p = &q * &(&q - &Laurent::one(Var::BigQ)); // Q^2 - Q
        let quot = p.exact_div(&q).unwrap();
        assert_eq!(quot, &q - &Laurent::one(Var::BigQ));
        // Monomials are units of the Laurent ring, so dividing by Q alone
        // never fails; it shifts exponents.
        let shifted = (&p + &Laurent::one(Var::BigQ)).exact_div(&q).unwrap();
        assert_eq!(shifted.min_exp(), Some(-1));
        // Non-monomial divisors detect genuine remainders.
        let q_plus_1 = &q + &Laurent::one(Var::BigQ);
        let sq = &q_plus_1 * &q_plus_1;
        assert_eq!(sq.exact_div(&q_plus_1).unwrap(), q_plus_1);
        let bad = (&sq + &Laurent::one(Var::BigQ)).exact_div(&q_plus_1);
        assert_eq!(bad, Err(ArithError::InexactDivision));
        // Laurent shifts divide out too.
        let d3 = Laurent::from_terms(Var::SmallQ, [(1, rat(1)), (0, rat(2)), (-1, rat(1))]);
        let two = d3.exact_div(&d3).unwrap();
        assert!(two.is_one());
    }

    #[test]
    fn display_format() {
        let d3 = q_poly(&[(1, 1), (0, 1), (-1, 1)]);
        assert_eq!(d3.to_string(), "q^1 + 1 + q^-1");
        let p = Laurent::from_terms(
            Var::BigQ,
            [(2, rat(1)), (1, rat(-3)), (0, ratio(1, 2))],
        );
        assert_eq!(p.to_string(), "Q^2 - 3*Q^1 + 1/2");
        assert_eq!(Laurent::zero(Var::A).to_string(), "0");
        assert_eq!(d3.to_machine(), "[[1,1,1],[0,1,1],[-1,1,1]]");
    }

    #[test]
    fn roundtrip_consistency() {
        // substitute(substitute(p, d), A) == substitute(p, A) for p in Q
        let q = Laurent::gen(Var::BigQ);
        let p = (&q * &q) - (Laurent::int(Var::BigQ, 7) * &q) + Laurent::int(Var::BigQ, 3);
        let via_d = p.substitute(Var::D).unwrap().substitute(Var::A).unwrap();
        let direct = p.substitute(Var::A).unwrap();
        assert_eq!(via_d, direct);
    }
}
