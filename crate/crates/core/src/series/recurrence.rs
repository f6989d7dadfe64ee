use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{Family, FamilyKind};

use super::poly::Poly;

/// `[a1, …, ad]` meaning `s(n) = a1·s(n−1) + … + ad·s(n−d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RecurrenceSignature {
    coeffs: Vec<i64>,
}

impl RecurrenceSignature {
    pub fn new(coeffs: Vec<i64>) -> Result<RecurrenceSignature> {
        match coeffs.last() {
            None => Err(Error::InvalidSignature("empty signature".into())),
            Some(0) => Err(Error::InvalidSignature("last coefficient is zero".into())),
            Some(_) => Ok(RecurrenceSignature { coeffs }),
        }
    }

    /// Reads the signature off a denominator `1 − a1·x − … − ad·x^d`.
    pub fn from_denominator(den: &Poly) -> Result<RecurrenceSignature> {
        if !den.coeff(0).is_one() {
            return Err(Error::NonUnitConstant(den.coeff(0).to_string()));
        }
        let coeffs = den.coeffs()[1..]
            .iter()
            .map(|c| {
                i64::try_from(-c)
                    .map_err(|_| Error::InvalidSignature("coefficient overflow".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        RecurrenceSignature::new(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    pub fn denominator(&self) -> Poly {
        let mut c = vec![BigInt::one()];
        c.extend(self.coeffs.iter().map(|&a| BigInt::from(-a)));
        Poly::new(c)
    }
}

impl fmt::Display for RecurrenceSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(i64::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Exact integer sequence `values[i] = s(start + i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sequence {
    start: usize,
    values: Vec<BigInt>,
}

impl Sequence {
    pub fn new(start: usize, values: Vec<BigInt>) -> Sequence {
        Sequence { start, values }
    }

    pub fn from_i64(start: usize, values: &[i64]) -> Sequence {
        Sequence::new(start, values.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// Last index held, or `None` when empty.
    pub fn end(&self) -> Option<usize> {
        (self.start + self.values.len()).checked_sub(1)
    }

    pub fn get(&self, n: usize) -> Option<&BigInt> {
        n.checked_sub(self.start).and_then(|i| self.values.get(i))
    }

    /// The terms with index in `from..=to` that this sequence holds.
    pub fn slice(&self, from: usize, to: usize) -> Vec<BigInt> {
        (from..=to).filter_map(|n| self.get(n).cloned()).collect()
    }
}

/// Extends `init` to index `n_max` with the recurrence. `init` must hold at
/// least `degree` terms.
pub fn extend(sig: &RecurrenceSignature, init: &Sequence, n_max: usize) -> Result<Sequence> {
    let d = sig.degree();
    if init.values.len() < d {
        return Err(Error::InsufficientInitialValues {
            needed: d,
            got: init.values.len(),
        });
    }
    let mut values = init.values.clone();
    while init.start + values.len() <= n_max {
        let len = values.len();
        let mut next = BigInt::zero();
        for (i, &a) in sig.coeffs.iter().enumerate() {
            if a != 0 {
                next += BigInt::from(a) * &values[len - 1 - i];
            }
        }
        values.push(next);
    }
    values.truncate((n_max + 1).saturating_sub(init.start));
    Ok(Sequence::new(init.start, values))
}

/// Which recurrence to report for CA≤k.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SignatureForm {
    /// Degree `k+2`: `[0, 2, 2, …, 2]` (also the only form for CA and CA≥k).
    #[default]
    Dense,
    /// Degree `k+3`: `[1, 2, 0, …, 0, −2]`.
    Sparse,
}

/// Recurrence signature and the initial values (from `n = 1`) needed to run
/// it, taken from the closed-form initial-value statements.
pub fn signature_for_family(f: Family) -> Result<(RecurrenceSignature, Sequence)> {
    signature_for_family_form(f, SignatureForm::Dense)
}

pub fn signature_for_family_form(
    f: Family,
    form: SignatureForm,
) -> Result<(RecurrenceSignature, Sequence)> {
    let pow2 = |e: u32| BigInt::one() << e;
    match (f.kind(), f.k()) {
        (FamilyKind::Ca, _) | (FamilyKind::CaGeK, Some(1)) => Ok((
            RecurrenceSignature::new(vec![1, 1, 1])?,
            Sequence::from_i64(1, &[1, 1, 3]),
        )),
        (FamilyKind::CaGeK, Some(k)) if k >= 2 => {
            let mut coeffs = vec![0; k as usize + 2];
            coeffs[..3].copy_from_slice(&[1, 1, -1]);
            coeffs[k as usize + 1] = 2;
            let mut init = vec![BigInt::one(); k as usize + 1];
            init.push(BigInt::from(3));
            Ok((RecurrenceSignature::new(coeffs)?, Sequence::new(1, init)))
        }
        (FamilyKind::CaLeK, Some(k)) => {
            let mut init: Vec<BigInt> = (1..=k + 2).map(|n| pow2(n - 1)).collect();
            let coeffs = match form {
                SignatureForm::Dense => {
                    let mut c = vec![2; k as usize + 2];
                    c[0] = 0;
                    c
                }
                SignatureForm::Sparse => {
                    init.push(pow2(k + 2) - 2);
                    let mut c = vec![0; k as usize + 3];
                    c[0] = 1;
                    c[1] = 2;
                    c[k as usize + 2] = -2;
                    c
                }
            };
            Ok((RecurrenceSignature::new(coeffs)?, Sequence::new(1, init)))
        }
        _ => Err(Error::UnsupportedFamily(f.to_string())),
    }
}
