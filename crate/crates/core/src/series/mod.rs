//! Exact rational generating functions and linear recurrences.

mod gf;
mod poly;
mod recurrence;

pub use gf::{gf_coefficients, gf_for_family, gf_for_family_form, GfForm, RationalGF};
pub use poly::Poly;
pub use recurrence::{
    extend, signature_for_family, signature_for_family_form, RecurrenceSignature, Sequence,
    SignatureForm,
};
