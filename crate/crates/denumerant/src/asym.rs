//! Leading-term asymptotics as exact rationals, error reports against exact
//! counts, empirical error-exponent fitting, and the two summation identities
//! the inductive argument rests on.
//!
//! For a coprime set `A` with `k` parts the count grows like
//!
//! ```text
//! L(n) = n^(k-1) / (prod_{a in A} a * (k-1)!)
//! ```
//!
//! with an error of order `n^(k-2)`. Everything on the rational side here is
//! exact; floating point only enters the diagnostic outputs (`ratio`,
//! `norm_err`, `slope`).

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::count::{count_any, Method};
use crate::error::Error;
use crate::partset::PartSet;

/// `1 / (prod_{a in A} a * (k-1)!)`, the coefficient of `n^(k-1)`.
pub fn leading_coefficient(a: &PartSet) -> Result<BigRational, Error> {
    if !a.is_coprime() {
        return Err(Error::NotCoprime { gcd: a.gcd() });
    }
    let product: BigInt = a.parts().iter().map(|&p| BigInt::from(p)).product();
    let den = product * factorial(a.len() as u64 - 1);
    Ok(BigRational::new(BigInt::one(), den))
}

/// `leading_coefficient(A) * n^(k-1)` as an exact rational. `n^0 = 1` even at
/// `n = 0`, so the one-part set yields the constant 1.
pub fn leading_term(a: &PartSet, n: u64) -> Result<BigRational, Error> {
    let coeff = leading_coefficient(a)?;
    Ok(coeff * power_of(n, a.len() as u32 - 1))
}

/// Leading term consistent with gcd reduction, defined for every valid set:
/// `g * n^(k-1) / (prod_{a in A} a * (k-1)!)` where `g = gcd(A)`.
///
/// Coincides with [`leading_term`] when `g = 1`, and with the reduced set's
/// leading term at `n / g` on the support `g | n` otherwise.
pub fn leading_term_reduced(a: &PartSet, n: u64) -> BigRational {
    let product: BigInt = a.parts().iter().map(|&p| BigInt::from(p)).product();
    let den = product * factorial(a.len() as u64 - 1);
    let num = BigInt::from(a.gcd()) * power_of(n, a.len() as u32 - 1);
    BigRational::new(num, den)
}

fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

fn power_of(n: u64, exp: u32) -> BigInt {
    BigInt::from(n).pow(exp)
}

/// Exact count vs leading term at a single target.
#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticReport {
    pub n: u64,
    /// `p_A(n)`.
    pub exact: BigUint,
    /// `L(n)`, exact.
    pub leading: BigRational,
    /// `exact / L(n)` as a double; tends to 1.
    pub ratio: f64,
    /// `|exact - L(n)|`, exact.
    pub abs_err: BigRational,
    /// `abs_err / n^(k-2)`; `None` for one-part sets, where the error is
    /// identically zero and the normalization exponent would be negative.
    pub norm_err: Option<f64>,
}

/// Compares the exact count against the leading term at `n >= 1` for a
/// coprime set. The count comes from the dynamic-programming route.
pub fn report(a: &PartSet, n: u64) -> Result<AsymptoticReport, Error> {
    let exact = count_any(a, n, Method::Dp);
    report_with_count(a, n, exact)
}

/// Like [`report`], with the exact count supplied by the caller — the cheap
/// path when sweeping many targets off one [`crate::CountTable`].
pub fn report_with_count(a: &PartSet, n: u64, exact: BigUint) -> Result<AsymptoticReport, Error> {
    debug_assert!(n >= 1, "report is defined for positive targets");
    let leading = leading_term(a, n)?;
    let exact_rat = BigRational::from(BigInt::from(exact.clone()));
    let ratio = (exact_rat.clone() / &leading).to_f64().unwrap_or(f64::NAN);
    let abs_err = (exact_rat - &leading).abs();
    let k = a.len() as u32;
    let norm_err = if k >= 2 {
        let scaled = &abs_err / BigRational::from(power_of(n, k - 2));
        Some(scaled.to_f64().unwrap_or(f64::NAN))
    } else {
        None
    };
    Ok(AsymptoticReport {
        n,
        exact,
        leading,
        ratio,
        abs_err,
        norm_err,
    })
}

/// Log-log least-squares fit of windowed error maxima against the target.
#[derive(Debug, Clone, PartialEq)]
pub struct SlopeFit {
    pub set: PartSet,
    /// `(window center, max |p_A(n) - L(n)| in the window)`, centers strictly
    /// increasing; windows that contain no integer target are dropped.
    pub windows: Vec<(f64, f64)>,
    /// Least-squares slope of `log(max err)` vs `log(center)` over the
    /// windows with nonzero error — the empirical error exponent.
    pub slope: f64,
    pub intercept: f64,
}

/// Splits `[n_min, n_max]` into `windows` geometrically spaced windows,
/// records the maximum absolute error `|p_A(n) - L(n)|` in each (computed in
/// exact integers over the common denominator), and fits a line to the
/// nonzero maxima on log-log axes.
///
/// Window maxima rather than means: the error oscillates, and the bound of
/// interest governs the envelope.
pub fn error_slope(
    a: &PartSet,
    n_min: u64,
    n_max: u64,
    windows: usize,
) -> Result<SlopeFit, Error> {
    if !a.is_coprime() {
        return Err(Error::NotCoprime { gcd: a.gcd() });
    }
    if a.len() < 2 {
        return Err(Error::NeedsTwoParts { len: a.len() });
    }
    if n_min < 16 {
        return Err(Error::FitRange("n_min must be at least 16"));
    }
    if n_max < 8 * n_min {
        return Err(Error::FitRange("n_max must be at least 8 * n_min"));
    }
    if windows < 4 {
        return Err(Error::FitRange("need at least 4 windows"));
    }

    let k = a.len() as u32;
    // |p - L| = |p * D - n^(k-1)| / D with the constant denominator
    // D = prod(a) * (k-1)!; comparing numerators avoids per-target gcds.
    let denom: BigInt = a.parts().iter().map(|&p| BigInt::from(p)).product::<BigInt>()
        * factorial(a.len() as u64 - 1);
    let table = crate::count::count_dp(a, n_max);

    let span = (n_max as f64 / n_min as f64).ln();
    let mut maxima: Vec<BigInt> = vec![BigInt::zero(); windows];
    for n in n_min..=n_max {
        let w = (((n as f64 / n_min as f64).ln() / span) * windows as f64) as usize;
        let w = w.min(windows - 1);
        let err_num =
            (BigInt::from(table.get(n).clone()) * &denom - power_of(n, k - 1)).abs();
        if err_num > maxima[w] {
            maxima[w] = err_num;
        }
    }

    let ratio_per_window = (n_max as f64 / n_min as f64).powf(1.0 / windows as f64);
    let mut fit_windows = Vec::with_capacity(windows);
    for (w, max_num) in maxima.iter().enumerate() {
        let lo = n_min as f64 * ratio_per_window.powi(w as i32);
        let hi = lo * ratio_per_window;
        // skip windows that caught no integer target
        if (lo.ceil() as u64) > (hi.floor() as u64) && max_num.is_zero() {
            continue;
        }
        let center = (lo * hi).sqrt();
        let max_err = BigRational::new(max_num.clone(), denom.clone())
            .to_f64()
            .unwrap_or(f64::NAN);
        fit_windows.push((center, max_err));
    }

    let points: Vec<(f64, f64)> = fit_windows
        .iter()
        .filter(|(_, e)| *e > 0.0)
        .map(|&(c, e)| (c.ln(), e.ln()))
        .collect();
    if points.len() < 2 {
        return Err(Error::DegenerateFit {
            nonzero_windows: points.len(),
        });
    }
    let (slope, intercept) = least_squares(&points);
    Ok(SlopeFit {
        set: a.clone(),
        windows: fit_windows,
        slope,
        intercept,
    })
}

fn least_squares(points: &[(f64, f64)]) -> (f64, f64) {
    let n = points.len() as f64;
    let sx: f64 = points.iter().map(|p| p.0).sum();
    let sy: f64 = points.iter().map(|p| p.1).sum();
    let sxx: f64 = points.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = points.iter().map(|p| p.0 * p.1).sum();
    let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    let intercept = (sy - slope * sx) / n;
    (slope, intercept)
}

/// `1 / (k! * (k-1)!)` — the classical coefficient for parts `{1, ..., k}`.
pub fn erdos_lehner_coefficient(k: u64) -> BigRational {
    assert!(k >= 1);
    BigRational::new(BigInt::one(), factorial(k) * factorial(k - 1))
}

/// Σ_{l=0}^{r} l^j by direct big-integer summation (with `0^0 = 1`), plus a
/// check that the sum sits within `[r^(j+1)/(j+1), r^(j+1)/(j+1) + r^j + 1]`
/// — the integral-comparison bound, verified in exact rationals.
pub fn power_sum_check(r: u64, j: u32) -> (BigUint, bool) {
    let mut sum = BigUint::zero();
    for l in 0..=r {
        sum += BigUint::from(l).pow(j);
    }
    let sum_rat = BigRational::from(BigInt::from(sum.clone()));
    let main = BigRational::new(power_of(r, j + 1), BigInt::from(j + 1));
    let slack = BigRational::from(power_of(r, j) + BigInt::one());
    let diff = sum_rat - main;
    let ok = !diff.is_negative() && diff <= slack;
    (sum, ok)
}

/// Checks Σ_{j=0}^{k-2} (-1)^j C(k-1, j+1) = 1 in exact integers; the
/// telescoping identity that collapses the binomial expansion of the inner
/// power sum to a single term.
pub fn alternating_binomial_check(k: u64) -> bool {
    assert!(k >= 2);
    let mut sum = BigInt::zero();
    let mut binom = BigInt::from(k - 1); // C(k-1, 1)
    for j in 0..=(k - 2) {
        if j % 2 == 0 {
            sum += &binom;
        } else {
            sum -= &binom;
        }
        // C(k-1, j+2) from C(k-1, j+1)
        binom = binom * BigInt::from(k - 2 - j) / BigInt::from(j + 2);
    }
    sum == BigInt::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(parts: &[i64]) -> PartSet {
        PartSet::new(parts).unwrap()
    }

    fn rat(num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(leading_coefficient(&set(&[1, 2, 3])).unwrap(), rat(1, 12));
        assert_eq!(leading_coefficient(&set(&[3, 5, 7])).unwrap(), rat(1, 210));
        assert_eq!(leading_coefficient(&set(&[1])).unwrap(), rat(1, 1));
        assert_eq!(
            leading_coefficient(&set(&[2, 4])),
            Err(Error::NotCoprime { gcd: 2 })
        );
    }

    #[test]
    fn term_examples() {
        assert_eq!(
            leading_term(&set(&[3, 5, 7]), 100).unwrap(),
            rat(1000, 21)
        );
        assert_eq!(leading_term(&set(&[1]), 42).unwrap(), rat(1, 1));
        assert_eq!(leading_term(&set(&[1, 2]), 10).unwrap(), rat(5, 1));
    }

    #[test]
    fn reduced_term_matches_reduced_set() {
        // {2,4} at 6 reduces to {1,2} at 3: both give 3/2
        assert_eq!(leading_term_reduced(&set(&[2, 4]), 6), rat(3, 2));
        assert_eq!(leading_term(&set(&[1, 2]), 3).unwrap(), rat(3, 2));
        // coprime sets: identical to leading_term
        assert_eq!(
            leading_term_reduced(&set(&[3, 5, 7]), 100),
            leading_term(&set(&[3, 5, 7]), 100).unwrap()
        );
    }

    #[test]
    fn report_examples() {
        let r = report(&set(&[1, 2]), 10).unwrap();
        assert_eq!(r.exact, BigUint::from(6u32));
        assert_eq!(r.leading, rat(5, 1));
        assert_eq!(r.abs_err, rat(1, 1));
        assert_eq!(r.norm_err, Some(1.0));
        assert!((r.ratio - 1.2).abs() < 1e-12);

        let r = report(&set(&[1]), 7).unwrap();
        assert_eq!(r.exact, BigUint::one());
        assert_eq!(r.leading, rat(1, 1));
        assert_eq!(r.abs_err, rat(0, 1));
        assert_eq!(r.norm_err, None);

        let r = report(&set(&[2, 3]), 6).unwrap();
        assert_eq!(r.exact, BigUint::from(2u32));
        assert_eq!(r.leading, rat(1, 1));
        assert_eq!(r.abs_err, rat(1, 1));
    }

    #[test]
    fn slope_flat_for_two_smallest_parts() {
        // |p_{1,2}(n) - n/2| <= 1 for every n, so the fitted exponent is ~0
        let fit = error_slope(&set(&[1, 2]), 16, 4096, 8).unwrap();
        assert!(fit.slope <= 0.15, "slope = {}", fit.slope);
        assert_eq!(fit.windows.len(), 8);
        for w in fit.windows.windows(2) {
            assert!(w[0].0 < w[1].0);
        }
    }

    #[test]
    fn slope_rejects_bad_inputs() {
        assert_eq!(
            error_slope(&set(&[1]), 16, 4096, 8),
            Err(Error::NeedsTwoParts { len: 1 })
        );
        assert_eq!(
            error_slope(&set(&[2, 4]), 16, 4096, 8),
            Err(Error::NotCoprime { gcd: 2 })
        );
        assert!(matches!(
            error_slope(&set(&[1, 2]), 8, 4096, 8),
            Err(Error::FitRange(_))
        ));
        assert!(matches!(
            error_slope(&set(&[1, 2]), 16, 100, 8),
            Err(Error::FitRange(_))
        ));
        assert!(matches!(
            error_slope(&set(&[1, 2]), 16, 4096, 3),
            Err(Error::FitRange(_))
        ));
    }

    #[test]
    fn erdos_lehner_examples() {
        assert_eq!(erdos_lehner_coefficient(1), rat(1, 1));
        assert_eq!(erdos_lehner_coefficient(3), rat(1, 12));
        assert_eq!(erdos_lehner_coefficient(5), rat(1, 2880));
    }

    #[test]
    fn erdos_lehner_matches_first_k_integers() {
        for k in 1..=8u64 {
            let raw: Vec<i64> = (1..=k as i64).collect();
            assert_eq!(
                leading_coefficient(&set(&raw)).unwrap(),
                erdos_lehner_coefficient(k),
                "k={k}"
            );
        }
    }

    #[test]
    fn power_sum_examples() {
        let (sum, ok) = power_sum_check(10, 2);
        assert_eq!(sum, BigUint::from(385u32));
        assert!(ok);

        let (sum, ok) = power_sum_check(0, 5);
        assert_eq!(sum, BigUint::zero());
        assert!(ok);

        let (sum, ok) = power_sum_check(100, 1);
        assert_eq!(sum, BigUint::from(5050u32));
        assert!(ok);
    }

    #[test]
    fn alternating_binomial_examples() {
        assert!(alternating_binomial_check(2));
        assert!(alternating_binomial_check(5));
        assert!(alternating_binomial_check(64));
    }
}
