//! CA(n) ≅ C_no11(n) by local rewriting at odd positions.

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::tagged::SetLabel;

use super::require;

/// Rewrites every `(a,1,1)` that starts at an odd position of `c`:
/// `(a,1,1) → ((a+2)/2, (a+2)/2)` for even `a` and
/// `((a+1)/2, (a+1)/2, 1)` for odd `a`.
/// Positions are those of `c` itself, not of the partly rewritten output.
pub fn ca_to_no11(c: &Composition) -> Result<Composition> {
    require(&SetLabel::whole(Family::CA, 0), c)?;
    let v = c.plain_values()?;
    let mut out = Vec::with_capacity(v.len());
    let mut i = 0;
    while i < v.len() {
        if i % 2 == 0 && v.get(i + 1) == Some(&1) && v.get(i + 2) == Some(&1) {
            let a = v[i];
            if a < 2 {
                return Err(Error::Internal(format!("(1,1,1) at position {}", i + 1)));
            }
            if a % 2 == 0 {
                out.extend([(a + 2) / 2, (a + 2) / 2]);
            } else {
                out.extend([a.div_ceil(2), a.div_ceil(2), 1]);
            }
            i += 3;
        } else {
            out.push(v[i]);
            i += 1;
        }
    }
    let out = Composition::from_values_unchecked(out);
    check_image(Family::NO_ADJACENT_ONES, &out)?;
    Ok(out)
}

/// Inverse of [`ca_to_no11`]. Scanning left to right, a pair `(k,k)` that
/// would start at an odd position of the output becomes `(2k−1,1,1)` when
/// followed by a 1 (which it absorbs) and `(2k−2,1,1)` otherwise.
pub fn no11_to_ca(d: &Composition) -> Result<Composition> {
    require(&SetLabel::whole(Family::NO_ADJACENT_ONES, 0), d)?;
    let v = d.plain_values()?;
    let mut out = Vec::with_capacity(v.len() + v.len() / 2);
    let mut i = 0;
    while i < v.len() {
        if out.len() % 2 == 0 && v.get(i + 1) == Some(&v[i]) {
            let k = v[i];
            if k < 2 {
                return Err(Error::Internal(format!("(1,1) pair at position {}", i + 1)));
            }
            if v.get(i + 2) == Some(&1) {
                out.extend([2 * k - 1, 1, 1]);
                i += 3;
            } else {
                out.extend([2 * k - 2, 1, 1]);
                i += 2;
            }
        } else {
            out.push(v[i]);
            i += 1;
        }
    }
    let out = Composition::from_values_unchecked(out);
    check_image(Family::CA, &out)?;
    Ok(out)
}

fn check_image(f: Family, c: &Composition) -> Result<()> {
    if f.contains(c)? {
        Ok(())
    } else {
        Err(Error::Internal(format!(
            "image {} not in {f}",
            c.list_form()
        )))
    }
}
