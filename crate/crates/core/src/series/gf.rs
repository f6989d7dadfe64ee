use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{Family, FamilyKind};

use super::poly::Poly;
use super::recurrence::Sequence;

/// `numerator / denominator` with denominator constant term 1, so the
/// Maclaurin coefficients are integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalGF {
    pub numerator: Poly,
    pub denominator: Poly,
}

/// Which of the two equivalent closed forms to use for CA≤k.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GfForm {
    /// `(1 − x²) / (1 − x − 2x² + 2x^{k+3})`
    #[default]
    Primary,
    /// `(1 + x) / (1 − 2x² − 2x³ − … − 2x^{k+2})`, the common factor
    /// `1 − x` cancelled.
    Reduced,
}

impl RationalGF {
    pub fn new(numerator: Poly, denominator: Poly) -> Result<RationalGF> {
        let gf = RationalGF {
            numerator,
            denominator,
        };
        gf.check()?;
        Ok(gf)
    }

    fn check(&self) -> Result<()> {
        if self.denominator.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let c0 = self.denominator.coeff(0);
        if !c0.is_one() {
            return Err(Error::NonUnitConstant(c0.to_string()));
        }
        Ok(())
    }

    /// `(1 − x²) / (1 − x − x² + x³ − 2x^{k+2})`, for any `k` including 0.
    pub fn ca_ge_formula(k: u32) -> RationalGF {
        let den = &Poly::from_i64(&[1, -1, -1, 1]) - &Poly::monomial(2, k as usize + 2);
        RationalGF {
            numerator: Poly::from_i64(&[1, 0, -1]),
            denominator: den,
        }
    }

    pub fn ca_le_formula(k: u32, form: GfForm) -> RationalGF {
        match form {
            GfForm::Primary => {
                let den = &Poly::from_i64(&[1, -1, -2]) - &Poly::monomial(-2, k as usize + 3);
                RationalGF {
                    numerator: Poly::from_i64(&[1, 0, -1]),
                    denominator: den,
                }
            }
            GfForm::Reduced => {
                let mut den = vec![BigInt::zero(); k as usize + 3];
                den[0] = BigInt::one();
                for c in &mut den[2..] {
                    *c = BigInt::from(-2);
                }
                RationalGF {
                    numerator: Poly::from_i64(&[1, 1]),
                    denominator: Poly::new(den),
                }
            }
        }
    }

    /// Coefficients of `x^0 … x^n_max` by exact power-series division.
    pub fn coefficients(&self, n_max: usize) -> Result<Sequence> {
        self.check()?;
        let den = self.denominator.coeffs();
        let mut out: Vec<BigInt> = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let mut c = self.numerator.coeff(n);
            for (i, d) in den.iter().enumerate().skip(1).take(n) {
                if !d.is_zero() {
                    c -= d * &out[n - i];
                }
            }
            out.push(c);
        }
        Ok(Sequence::new(0, out))
    }

    /// Cross-multiplied equality `a/b = c/d ⇔ a·d = c·b`.
    pub fn same_function(&self, other: &RationalGF) -> bool {
        &self.numerator * &other.denominator == &other.numerator * &self.denominator
    }
}

/// Closed-form generating function `Σ count(f, n) xⁿ`.
///
/// Supported: CA, CA≥k (k = 0 is the all-compositions series), CA≤k.
pub fn gf_for_family(f: Family) -> Result<RationalGF> {
    gf_for_family_form(f, GfForm::Primary)
}

pub fn gf_for_family_form(f: Family, form: GfForm) -> Result<RationalGF> {
    match (f.kind(), f.k()) {
        (FamilyKind::Ca, _) => Ok(RationalGF::ca_ge_formula(1)),
        (FamilyKind::CaGeK, Some(0)) => {
            RationalGF::new(Poly::from_i64(&[1, -1]), Poly::from_i64(&[1, -2]))
        }
        (FamilyKind::CaGeK, Some(k)) => Ok(RationalGF::ca_ge_formula(k)),
        (FamilyKind::CaLeK, Some(k)) => Ok(RationalGF::ca_le_formula(k, form)),
        _ => Err(Error::UnsupportedFamily(f.to_string())),
    }
}

/// Coefficients `0..=n_max` of `g`.
pub fn gf_coefficients(g: &RationalGF, n_max: usize) -> Result<Sequence> {
    g.coefficients(n_max)
}
