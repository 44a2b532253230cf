//! Truncated univariate formal power series with exact coefficients.
//!
//! A [`Series`] knows its coefficients for degrees `0..=order` and nothing
//! beyond; binary operations truncate to the smaller order rather than erroring.
//! Values are immutable after construction and freely shareable.
//!
//! Invariants:
//! - `coeffs.len() == order + 1` (never empty)
//! - coefficients beyond the order are unknown, not zero; [`Series::coeff`]
//!   panics there and [`Series::get`] returns `None`

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::coeff::Coeff;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("not a unit: constant term is zero")]
    NotAUnit,
    #[error("square root requires constant term 1")]
    SqrtNeedsUnitConstant,
    #[error("composition requires inner series with zero constant term")]
    ComposeNeedsZeroConstant,
    #[error("compositional inverse requires zero constant term and nonzero linear coefficient")]
    NotInvertibleUnderComposition,
    #[error("cannot divide by t^{power}: coefficient of t^{degree} is nonzero")]
    NotDivisibleByPower { power: usize, degree: usize },
    #[error(
        "not t-adically contracting: degree-{degree} coefficient changed at iteration {iteration}"
    )]
    NotContracting { degree: usize, iteration: usize },
}

/// Formal power series truncated at an explicit order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series<T> {
    coeffs: Vec<T>,
}

impl<T: Coeff> Series<T> {
    /// The zero series known to the given order.
    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![T::zero(); order + 1],
        }
    }

    /// The constant series `c` known to the given order.
    pub fn constant(c: T, order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The constant series `1`.
    pub fn one(order: usize) -> Self {
        Series::constant(T::one(), order)
    }

    /// The identity series `t`.
    pub fn identity(order: usize) -> Self {
        Series::monomial(T::one(), 1, order)
    }

    /// `c * t^k`, truncated to the given order (zero if `k > order`).
    pub fn monomial(c: T, k: usize, order: usize) -> Self {
        let mut s = Series::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Build from explicit coefficients; the order is `coeffs.len() - 1`.
    ///
    /// Panics if `coeffs` is empty.
    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series has at least its constant term"
        );
        Series { coeffs }
    }

    /// Convenience constructor from small integers.
    pub fn from_ints(values: &[i64]) -> Self {
        Series::from_coeffs(values.iter().map(|&v| crate::coeff::small(v)).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^k`. Panics past the truncation order.
    pub fn coeff(&self, k: usize) -> &T {
        assert!(
            k <= self.order(),
            "coefficient of t^{k} is beyond truncation order {}",
            self.order()
        );
        &self.coeffs[k]
    }

    pub fn get(&self, k: usize) -> Option<&T> {
        self.coeffs.get(k)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Re-truncate to `min(order, self.order())`.
    pub fn truncated(&self, order: usize) -> Self {
        let keep = order.min(self.order());
        Series {
            coeffs: self.coeffs[..=keep].to_vec(),
        }
    }

    /// Coefficientwise equality up to the smaller of the two orders.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let keep = self.order().min(other.order());
        self.coeffs[..=keep] == other.coeffs[..=keep]
    }

    /// Degree of the first differing coefficient (up to the smaller order).
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let keep = self.order().min(other.order());
        (0..=keep).find(|&k| self.coeffs[k] != other.coeffs[k])
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Series {
            coeffs: (0..=order)
                .map(|k| self.coeffs[k].clone() + other.coeffs[k].clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Series {
            coeffs: (0..=order)
                .map(|k| self.coeffs[k].clone() - other.coeffs[k].clone())
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn scale(&self, r: &T) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|c| c.clone() * r.clone()).collect(),
        }
    }

    /// Cauchy product, truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![T::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Series { coeffs }
    }

    /// Multiply by `t^k`; the order grows by `k` so no information is lost.
    pub fn shift(&self, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); self.order() + k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i + k] = c.clone();
        }
        Series { coeffs }
    }

    /// Exact division by `t^k`; errors if any coefficient below `t^k` is
    /// nonzero. The order shrinks by `k`.
    pub fn div_by_power(&self, k: usize) -> Result<Self, SeriesError> {
        assert!(k <= self.order(), "cannot divide past the truncation order");
        for (degree, c) in self.coeffs.iter().take(k).enumerate() {
            if !c.is_zero() {
                return Err(SeriesError::NotDivisibleByPower { power: k, degree });
            }
        }
        Ok(Series {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// `self^e` at this series' own order (`e = 0` gives the one series).
    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Series::one(self.order());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    ///
    /// Uses the triangular recurrence `b_0 = 1/a_0`,
    /// `b_n = -(1/a_0) * sum_{k=1}^{n} a_k b_{n-k}`.
    pub fn invert_unit(&self) -> Result<Self, SeriesError> {
        if self.coeffs[0].is_zero() {
            return Err(SeriesError::NotAUnit);
        }
        let inv0 = T::one() / self.coeffs[0].clone();
        let mut coeffs = vec![T::zero(); self.order() + 1];
        coeffs[0] = inv0.clone();
        for n in 1..=self.order() {
            let mut acc = T::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() || coeffs[n - k].is_zero() {
                    continue;
                }
                acc = acc + self.coeffs[k].clone() * coeffs[n - k].clone();
            }
            coeffs[n] = -(inv0.clone() * acc);
        }
        Ok(Series { coeffs })
    }

    /// Square root with constant term 1 (the branch fixed by that choice);
    /// requires `self` to have constant term 1.
    ///
    /// Degree-by-degree: `b_n = (a_n - sum_{k=1}^{n-1} b_k b_{n-k}) / 2`.
    pub fn sqrt_unit(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::SqrtNeedsUnitConstant);
        }
        let two = T::one() + T::one();
        let mut coeffs = vec![T::zero(); self.order() + 1];
        coeffs[0] = T::one();
        for n in 1..=self.order() {
            let mut acc = self.coeffs[n].clone();
            for k in 1..n {
                if coeffs[k].is_zero() || coeffs[n - k].is_zero() {
                    continue;
                }
                acc = acc - coeffs[k].clone() * coeffs[n - k].clone();
            }
            coeffs[n] = acc / two.clone();
        }
        Ok(Series { coeffs })
    }

    /// Substitute `inner` for the variable; `inner` must have zero constant
    /// term. The result is truncated to the smaller of the two orders.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::ComposeNeedsZeroConstant);
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncated(order);
        // Horner evaluation from the top coefficient down.
        let mut acc = Series::constant(self.coeffs[order].clone(), order);
        for k in (0..order).rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] = acc.coeffs[0].clone() + self.coeffs[k].clone();
        }
        Ok(acc)
    }

    /// The series `b` with `self(b(t)) = t`; requires zero constant term and
    /// a nonzero linear coefficient.
    ///
    /// Solved degree by degree: once `b` is correct below degree `d`, the
    /// degree-`d` residual of `self(b) - t` is linear in the unknown `b_d`
    /// with slope `a_1`.
    pub fn compositional_inverse(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() || self.order() < 1 || self.coeffs[1].is_zero() {
            return Err(SeriesError::NotInvertibleUnderComposition);
        }
        let order = self.order();
        let inv_linear = T::one() / self.coeffs[1].clone();
        let mut coeffs = vec![T::zero(); order + 1];
        coeffs[1] = inv_linear.clone();
        for d in 2..=order {
            let partial = Series::from_coeffs(coeffs[..=d].to_vec());
            let composed = self.truncated(d).compose(&partial)?;
            coeffs[d] = -(composed.coeffs[d].clone() * inv_linear.clone());
        }
        Ok(Series { coeffs })
    }

    /// Plain-text rendering `c0 + c1*t + ...` with zero terms omitted.
    pub fn to_text(&self, var: &str) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = {
                // Render via the sign of the printed form to stay generic.
                let s = format!("{c}");
                s.starts_with('-')
            };
            let magnitude = if negative {
                format!("{}", -c.clone())
            } else {
                format!("{c}")
            };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let unit_coeff = magnitude == "1";
            match (k, unit_coeff) {
                (0, _) => out.push_str(&magnitude),
                (1, true) => out.push_str(var),
                (1, false) => {
                    out.push_str(&magnitude);
                    out.push('*');
                    out.push_str(var);
                }
                (_, true) => out.push_str(&format!("{var}^{k}")),
                (_, false) => out.push_str(&format!("{magnitude}*{var}^{k}")),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Coefficients rendered as exact strings, constant term first.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| format!("{c}")).collect()
    }

    /// JSON array of exact coefficient strings.
    pub fn to_json(&self) -> String {
        serde_json::Value::from(self.coeff_strings()).to_string()
    }
}

impl Series<num::BigRational> {
    /// True when every coefficient has denominator 1.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl<T: Coeff> Add for &Series<T> {
    type Output = Series<T>;
    fn add(self, rhs: Self) -> Series<T> {
        Series::add(self, rhs)
    }
}

impl<T: Coeff> Sub for &Series<T> {
    type Output = Series<T>;
    fn sub(self, rhs: Self) -> Series<T> {
        Series::sub(self, rhs)
    }
}

impl<T: Coeff> Mul for &Series<T> {
    type Output = Series<T>;
    fn mul(self, rhs: Self) -> Series<T> {
        Series::mul(self, rhs)
    }
}

impl<T: Coeff> Neg for &Series<T> {
    type Output = Series<T>;
    fn neg(self) -> Series<T> {
        Series::neg(self)
    }
}

impl<T: Coeff> fmt::Display for Series<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("t"))
    }
}

/// Unique fixed point of a t-adically contracting map.
///
/// `builder` must produce, at degree `d`, a coefficient that depends only on
/// input coefficients of degree `< d` (plus constants). Iteration then fixes
/// at least one more degree per round starting from the zero series, and the
/// solver verifies that behavior, erroring out on any map that revisits an
/// already-settled degree.
pub fn solve_fixed_point<T, F>(order: usize, builder: F) -> Result<Series<T>, SeriesError>
where
    T: Coeff,
    F: Fn(&Series<T>) -> Series<T>,
{
    let mut current: Series<T> = Series::zero(order);
    for iteration in 0..=order {
        let next = builder(&current).truncated(order);
        assert!(
            next.order() == order,
            "fixed-point builder must preserve the working order"
        );
        match current.first_difference(&next) {
            None => return Ok(current),
            Some(degree) if degree < iteration => {
                return Err(SeriesError::NotContracting { degree, iteration });
            }
            Some(_) => current = next,
        }
    }
    let next = builder(&current).truncated(order);
    match current.first_difference(&next) {
        None => Ok(current),
        Some(degree) => Err(SeriesError::NotContracting {
            degree,
            iteration: order + 1,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};
    use crate::sequences::CATALAN_PREFIX;
    use crate::QSeries;

    fn q(values: &[i64]) -> QSeries {
        Series::from_ints(values)
    }

    #[test]
    fn mul_difference_of_squares() {
        let a = q(&[1, 1, 0]);
        let b = q(&[1, -1, 0]);
        assert_eq!(a.mul(&b), q(&[1, 0, -1]));
    }

    #[test]
    fn add_zero_is_identity() {
        let s = q(&[3, -2, 7]);
        assert_eq!(s.add(&QSeries::zero(2)), s);
    }

    #[test]
    fn mul_truncates_to_min_order() {
        let a = q(&[1, 1, 1, 1, 1]);
        let b = q(&[1, 1]);
        assert_eq!(a.mul(&b).order(), 1);
        assert_eq!(a.add(&b).order(), 1);
    }

    #[test]
    fn catalan_self_convolution() {
        // Coefficient of x^3 in c(x)^2 from the frozen Catalan prefix:
        // 1*5 + 1*2 + 2*1 + 5*1.
        let c = q(&CATALAN_PREFIX[..4]);
        assert_eq!(*c.mul(&c).coeff(3), rat(14));
    }

    #[test]
    fn invert_geometric_series() {
        let s = q(&[1, -1, 0, 0, 0]).invert_unit().unwrap();
        assert_eq!(s, q(&[1, 1, 1, 1, 1]));
        let s = q(&[1, 1, 0, 0, 0]).invert_unit().unwrap();
        assert_eq!(s, q(&[1, -1, 1, -1, 1]));
    }

    #[test]
    fn invert_constant() {
        let s = QSeries::constant(rat(2), 3).invert_unit().unwrap();
        assert_eq!(s, QSeries::constant(ratio(1, 2), 3));
    }

    #[test]
    fn invert_rejects_zero_constant_term() {
        assert_eq!(q(&[0, 1]).invert_unit(), Err(SeriesError::NotAUnit));
    }

    #[test]
    fn sqrt_of_one_minus_four_x_gives_catalan_numbers() {
        let order = 10;
        let mut base = QSeries::one(order);
        base = base.sub(&QSeries::monomial(rat(4), 1, order));
        let root = base.sqrt_unit().unwrap();
        assert_eq!(root.truncated(4), q(&[1, -2, -2, -4, -10]));
        // (1 - sqrt(1-4x)) / (2x) is the Catalan generating function.
        let catalan = QSeries::one(order)
            .sub(&root)
            .div_by_power(1)
            .unwrap()
            .scale(&ratio(1, 2));
        for (n, &expected) in CATALAN_PREFIX.iter().take(order).enumerate() {
            assert_eq!(*catalan.coeff(n), rat(expected), "C_{n}");
        }
    }

    #[test]
    fn sqrt_identity_and_perfect_square() {
        assert_eq!(QSeries::one(5).sqrt_unit().unwrap(), QSeries::one(5));
        assert_eq!(q(&[1, 2, 1]).sqrt_unit().unwrap(), q(&[1, 1, 0]));
    }

    #[test]
    fn sqrt_rejects_non_unit_constant() {
        assert_eq!(
            q(&[2, 0, 0]).sqrt_unit(),
            Err(SeriesError::SqrtNeedsUnitConstant)
        );
    }

    #[test]
    fn sqrt_newton_iteration_agrees_with_recurrence() {
        // Independent route: Newton steps y <- (y + a/y) / 2.
        let a = q(&[1, 2, -3, 5, 7, -11, 2, 1, 9]);
        let half = ratio(1, 2);
        let mut y = QSeries::one(a.order());
        for _ in 0..a.order() + 1 {
            let correction = a.mul(&y.invert_unit().unwrap());
            y = y.add(&correction).scale(&half);
        }
        assert_eq!(a.sqrt_unit().unwrap(), y);
    }

    #[test]
    fn compose_geometric_with_t_plus_t_squared() {
        let outer = q(&[1, 1, 1, 1, 1]); // 1/(1-u) truncated
        let inner = q(&[0, 1, 1, 0, 0]); // t + t^2
        let composed = outer.compose(&inner).unwrap();
        // 1 + (t+t^2) + (t+t^2)^2 + ... : coefficient of t^2 is 2.
        assert_eq!(*composed.coeff(2), rat(2));
        assert_eq!(composed.truncated(2), q(&[1, 1, 2]));
    }

    #[test]
    fn compose_with_zero_keeps_constant_term() {
        let outer = q(&[7, 3, -1]);
        let composed = outer.compose(&QSeries::zero(2)).unwrap();
        assert_eq!(composed, q(&[7, 0, 0]));
    }

    #[test]
    fn compose_identity_outer_returns_inner() {
        let inner = q(&[0, 2, -5, 1]);
        let composed = QSeries::identity(3).compose(&inner).unwrap();
        assert_eq!(composed, inner);
    }

    #[test]
    fn compose_rejects_nonzero_inner_constant() {
        assert_eq!(
            q(&[1, 1]).compose(&q(&[1, 1])),
            Err(SeriesError::ComposeNeedsZeroConstant)
        );
    }

    #[test]
    fn inverse_of_t_plus_t_squared_is_signed_catalan() {
        let a = q(&[0, 1, 1, 0, 0, 0, 0, 0]);
        let inv = a.compositional_inverse().unwrap();
        assert_eq!(inv, q(&[0, 1, -1, 2, -5, 14, -42, 132]));
        assert_eq!(a.compose(&inv).unwrap(), QSeries::identity(7));
        assert_eq!(inv.compose(&a).unwrap(), QSeries::identity(7));
    }

    #[test]
    fn inverse_of_identity_is_identity() {
        let t = QSeries::identity(6);
        assert_eq!(t.compositional_inverse().unwrap(), t);
    }

    #[test]
    fn inverse_round_trip_for_cubic() {
        let order = 12;
        let t = QSeries::identity(order);
        let a = t.add(&t.pow(2)).add(&t.pow(3));
        let inv = a.compositional_inverse().unwrap();
        assert_eq!(a.compose(&inv).unwrap(), QSeries::identity(order));
        assert_eq!(
            inv.compositional_inverse().unwrap().truncated(order),
            a.truncated(order)
        );
    }

    #[test]
    fn inverse_rejects_bad_preconditions() {
        assert_eq!(
            q(&[1, 1]).compositional_inverse(),
            Err(SeriesError::NotInvertibleUnderComposition)
        );
        assert_eq!(
            q(&[0, 0, 1]).compositional_inverse(),
            Err(SeriesError::NotInvertibleUnderComposition)
        );
    }

    #[test]
    fn div_by_power_checks_low_coefficients() {
        assert_eq!(q(&[0, 0, 3, 1]).div_by_power(2).unwrap(), q(&[3, 1]));
        assert_eq!(
            q(&[0, 2, 3]).div_by_power(2),
            Err(SeriesError::NotDivisibleByPower {
                power: 2,
                degree: 1
            })
        );
    }

    #[test]
    fn fixed_point_solves_catalan_equation() {
        // c = 1 + t c^2 has the Catalan numbers as its unique solution.
        let order = 12;
        let solved = solve_fixed_point(order, |s: &QSeries| {
            QSeries::one(order).add(&s.mul(s).shift(1).truncated(order))
        })
        .unwrap();
        for (n, &expected) in CATALAN_PREFIX.iter().take(order + 1).enumerate() {
            assert_eq!(*solved.coeff(n), rat(expected), "C_{n}");
        }
    }

    #[test]
    fn fixed_point_rejects_non_contracting_builder() {
        let order = 6;
        // Depends on the same degree it produces: no contraction.
        let err = solve_fixed_point(order, |s: &QSeries| {
            QSeries::one(order).add(&s.scale(&rat(2)))
        });
        assert!(matches!(err, Err(SeriesError::NotContracting { .. })));
    }

    #[test]
    fn display_renders_signs_powers_and_fractions() {
        let s = QSeries::from_coeffs(vec![rat(1), rat(-1), ratio(1, 2), rat(0), rat(-2)]);
        assert_eq!(s.to_text("t"), "1 - t + 1/2*t^2 - 2*t^4");
        assert_eq!(QSeries::zero(3).to_text("t"), "0");
        assert_eq!(q(&[0, -1]).to_text("x"), "-x");
        assert_eq!(s.to_json(), r#"["1","-1","1/2","0","-2"]"#);
    }

    #[test]
    fn works_over_plain_floats() {
        let a: Series<f64> = Series::from_coeffs(vec![1.0, 0.5, 0.25]);
        let inv = a.invert_unit().unwrap();
        let product = a.mul(&inv);
        assert!((product.coeff(0) - 1.0).abs() < 1e-12);
        assert!(product.coeff(1).abs() < 1e-12);
        assert!(product.coeff(2).abs() < 1e-12);
    }
}
