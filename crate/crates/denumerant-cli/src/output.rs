//! Output records and their stable serialization.
//!
//! Counts and rational components serialize as decimal strings so consumers
//! never push an exact value through a 53-bit mantissa; real-valued
//! diagnostics (`ratio`, `norm_err`, `slope`) are rounded to 12 significant
//! digits before printing. Field order is fixed, and identical invocations
//! produce byte-identical output.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use denumerant::{leading_term_reduced, BigUint, PartSet};

/// Exact CSV column order for `table --format csv`; the JSON rows carry the
/// same fields under the same names.
pub const CSV_HEADER: &str = "n,count,leading_num,leading_den,ratio,abs_err_num,abs_err_den,norm_err";

/// Rounds to 12 significant digits. Diagnostics only — exact quantities stay
/// in their numerator/denominator string fields.
pub fn sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().expect("rounded float re-parses")
}

/// One target: the exact count next to the leading-term diagnostics.
#[derive(Debug, Serialize)]
pub struct CountRecord {
    pub parts: Vec<u64>,
    pub n: u64,
    pub count: String,
    pub leading_num: String,
    pub leading_den: String,
    pub ratio: Option<f64>,
    pub abs_err_num: String,
    pub abs_err_den: String,
    pub norm_err: Option<f64>,
    /// gcd of the input parts; counts for non-coprime sets are computed by
    /// scaling down to the reduced set.
    pub reduced_by: u64,
}

/// One row of a `table` sweep; mirrors the CSV columns exactly.
#[derive(Debug, Serialize)]
pub struct TableRow {
    pub n: u64,
    pub count: String,
    pub leading_num: String,
    pub leading_den: String,
    pub ratio: Option<f64>,
    pub abs_err_num: String,
    pub abs_err_den: String,
    pub norm_err: Option<f64>,
}

impl TableRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.n,
            self.count,
            self.leading_num,
            self.leading_den,
            csv_real(self.ratio),
            self.abs_err_num,
            self.abs_err_den,
            csv_real(self.norm_err),
        )
    }
}

#[derive(Debug, Serialize)]
pub struct AsymRecord {
    pub parts: Vec<u64>,
    pub n: u64,
    pub exact: String,
    pub leading_num: String,
    pub leading_den: String,
    pub ratio: f64,
    pub abs_err_num: String,
    pub abs_err_den: String,
    pub norm_err: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct FitRecord {
    pub parts: Vec<u64>,
    pub n_min: u64,
    pub n_max: u64,
    pub windows: Vec<(f64, f64)>,
    pub slope: f64,
    pub intercept: f64,
}

#[derive(Debug, Serialize)]
pub struct FrobeniusRecord {
    pub parts: Vec<u64>,
    pub frobenius: i64,
    pub threshold: u64,
    pub apery: Vec<u64>,
}

/// Success summary for `verify`; mismatches are reported on the spot instead.
#[derive(Debug, Serialize)]
pub struct VerifySummary {
    pub parts: Vec<u64>,
    pub max_n: u64,
    pub enum_max: u64,
    /// Targets where the dynamic-programming and recursive counts were compared.
    pub checked: u64,
    /// Targets additionally cross-checked against full enumeration.
    pub enumerated: u64,
    pub status: &'static str,
}

/// CSV cell for an optional real: plain decimal, empty when undefined.
fn csv_real(x: Option<f64>) -> String {
    match x {
        Some(v) => format!("{v}"),
        None => String::new(),
    }
}

/// Assembles the shared count/leading-term columns for a single target.
///
/// The leading term uses the gcd-aware form, so rows exist for every `n`
/// even when the input set is not coprime (off-lattice rows count 0). Two
/// cells can be undefined: `ratio` when the leading term is zero (`n = 0`
/// with two or more parts) and `norm_err` when the normalization `n^(k-2)`
/// is zero or the set has a single part.
pub fn build_row(a: &PartSet, n: u64, count: &BigUint) -> TableRow {
    let leading = leading_term_reduced(a, n);
    let exact = BigRational::from(BigInt::from(count.clone()));
    let abs_err = (&exact - &leading).abs();
    let ratio = if leading.is_zero() {
        None
    } else {
        Some(sig12((exact / &leading).to_f64().unwrap_or(f64::NAN)))
    };
    let k = a.len() as u32;
    let norm_err = if k < 2 || (n == 0 && k > 2) {
        None
    } else {
        let scale = BigRational::from(BigInt::from(n).pow(k - 2));
        Some(sig12((&abs_err / scale).to_f64().unwrap_or(f64::NAN)))
    };
    TableRow {
        n,
        count: count.to_string(),
        leading_num: leading.numer().to_string(),
        leading_den: leading.denom().to_string(),
        ratio,
        abs_err_num: abs_err.numer().to_string(),
        abs_err_den: abs_err.denom().to_string(),
        norm_err,
    }
}
