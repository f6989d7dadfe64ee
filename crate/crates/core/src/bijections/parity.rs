//! Splitting CA and CA≥k by the parity of the number of parts.
//!
//! Odd length:  CA≥k^o(n) ≅ CA≥k(n−1).
//! Even length: CA^e(n) ≅ CA(n−2) ∪ CA(n−3), and for k ≥ 2
//! CA≥k^e(n) ∪ CA≥k(n−3) ≅ CA≥k(n−2) ∪ 2·CA≥k(n−k−2).

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::tagged::{SetLabel, Subset, TaggedComposition};

use super::require;

fn plain(values: Vec<u32>) -> Composition {
    Composition::from_values_unchecked(values.into_iter().filter(|&v| v > 0))
}

fn odd_forward(f: Family, c: &Composition) -> Result<Composition> {
    if c.len().is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "{} has even length",
            c.list_form()
        )));
    }
    require(&SetLabel::new(f, Subset::OddLength, 0), c)?;
    let mut v = c.plain_values()?;
    *v.last_mut().expect("odd length") -= 1;
    Ok(plain(v))
}

fn odd_backward(f: Family, c: &Composition) -> Result<Composition> {
    require(&SetLabel::whole(f, 0), c)?;
    let mut v = c.plain_values()?;
    if v.len() % 2 == 1 {
        *v.last_mut().expect("odd length") += 1;
    } else {
        v.push(1);
    }
    Ok(plain(v))
}

/// Decrements the last part of an odd-length CA composition.
pub fn ca_odd_forward(c: &Composition) -> Result<Composition> {
    odd_forward(Family::CA, c)
}

pub fn ca_odd_backward(c: &Composition) -> Result<Composition> {
    odd_backward(Family::CA, c)
}

pub fn ca_ge_odd_forward(k: u32, c: &Composition) -> Result<Composition> {
    odd_forward(Family::ca_ge(k), c)
}

pub fn ca_ge_odd_backward(k: u32, c: &Composition) -> Result<Composition> {
    odd_backward(Family::ca_ge(k), c)
}

/// Core of the k = 1 even split on raw values. Returns the image and its
/// weight offset (2 or 3).
fn even_split(mut v: Vec<u32>) -> (Vec<u32>, u32) {
    let y = v.pop().expect("even length >= 2");
    let x = v.pop().expect("even length >= 2");
    if x == 1 {
        v.push(y - 2);
        (v, 3)
    } else {
        v.extend([x - 1, y - 1]);
        (v, 2)
    }
}

fn even_join(mut v: Vec<u32>, offset: u32) -> Result<Vec<u32>> {
    let odd = v.len() % 2 == 1;
    match (offset, odd) {
        (2, true) => {
            let c = v.pop().expect("odd");
            v.extend([c + 1, 1]);
        }
        (2, false) => {
            let len = v.len();
            if len == 0 {
                return Err(Error::Precondition(
                    "the even split needs n >= 3; CA(0) has no preimage".into(),
                ));
            }
            v[len - 2] += 1;
            v[len - 1] += 1;
        }
        (3, true) => {
            let c = v.pop().expect("odd");
            v.extend([1, c + 2]);
        }
        (3, false) => v.extend([1, 2]),
        _ => {
            return Err(Error::InvalidInput(format!(
                "unknown summand offset {offset}"
            )))
        }
    }
    Ok(v)
}

/// `CA^e(n) → CA(n−2) ∪ CA(n−3)`.
pub fn ca_even_forward(c: &Composition) -> Result<TaggedComposition> {
    even_forward_for(Family::CA, c)
}

fn even_forward_for(f: Family, c: &Composition) -> Result<TaggedComposition> {
    if c.len() % 2 == 1 || c.is_empty() {
        return Err(Error::Precondition(format!(
            "{} does not have positive even length",
            c.list_form()
        )));
    }
    require(&SetLabel::whole(f, 0), c)?;
    let (v, offset) = even_split(c.plain_values()?);
    Ok(TaggedComposition::new(plain(v), SetLabel::whole(f, offset)))
}

/// Inverse of [`ca_even_forward`]; the tag's offset selects the summand.
pub fn ca_even_backward(t: &TaggedComposition) -> Result<Composition> {
    even_backward_for(Family::CA, t)
}

fn even_backward_for(f: Family, t: &TaggedComposition) -> Result<Composition> {
    if t.label.family != f || t.label.subset != Subset::Whole {
        return Err(Error::InvalidInput(format!(
            "unknown summand {}",
            t.label.symbolic()
        )));
    }
    t.validate()?;
    Ok(plain(even_join(t.comp.plain_values()?, t.label.offset)?))
}

/// Summands of `CA≥k^e(n) ∪ CA≥k(n−3)`.
pub fn ca_ge_even_domain(k: u32) -> [SetLabel; 2] {
    let f = Family::ca_ge(k);
    [
        SetLabel::new(f, Subset::EvenLength, 0),
        SetLabel::whole(f, 3),
    ]
}

/// Summands of `CA≥k(n−2) ∪ 2·CA≥k(n−k−2)`.
pub fn ca_ge_even_codomain(k: u32) -> [SetLabel; 2] {
    let f = Family::ca_ge(k);
    [
        SetLabel::whole(f, 2),
        SetLabel::doubled(f, Subset::Whole, k + 2),
    ]
}

fn check_k(k: u32) -> Result<()> {
    if k == 0 {
        Err(Error::InvalidParameter {
            family: "ca-ge even split",
            k,
        })
    } else {
        Ok(())
    }
}

/// `CA≥k^e(n) ∪ CA≥k(n−3) → CA≥k(n−2) ∪ 2·CA≥k(n−k−2)`.
///
/// The first copy of `CA≥k(n−k−2)` receives the odd-length compositions of
/// `CA≥k(n−3)` whose last part is at least `k−1`; the second copy receives
/// the even-length compositions ending in a pair `(1, c)`.
/// For `k = 1` this delegates to the plain even split.
pub fn ca_ge_even_forward(k: u32, t: &TaggedComposition) -> Result<TaggedComposition> {
    check_k(k)?;
    let [even, shifted] = ca_ge_even_domain(k);
    let [near, far] = ca_ge_even_codomain(k);
    if t.label != even && t.label != shifted {
        return Err(Error::InvalidInput(format!(
            "{} is not a summand of the domain",
            t.label.symbolic()
        )));
    }
    t.validate()?;
    let f = Family::ca_ge(k);

    if k == 1 {
        if t.label == shifted {
            return Ok(TaggedComposition::with_copy(t.comp.clone(), far, 1));
        }
        let image = even_forward_for(f, &t.comp)?;
        return Ok(if image.label.offset == 2 {
            TaggedComposition::new(image.comp, near)
        } else {
            TaggedComposition::with_copy(image.comp, far, 2)
        });
    }

    let mut v = t.comp.plain_values()?;
    if t.label == even {
        let y = v.pop().expect("even length >= 2");
        let x = v.pop().expect("even length >= 2");
        return Ok(match (x > 1, y > 1) {
            (true, true) => {
                v.extend([x - 1, y - 1]);
                TaggedComposition::new(plain(v), near)
            }
            (true, false) => {
                v.push(x - 1);
                TaggedComposition::new(plain(v), near)
            }
            (false, _) => {
                v.push(y - k - 1);
                TaggedComposition::with_copy(plain(v), far, 2)
            }
        });
    }

    if v.len() % 2 == 0 {
        v.push(1);
        return Ok(TaggedComposition::new(plain(v), near));
    }
    let c = v.pop().expect("odd length");
    Ok(if c >= k - 1 {
        v.push(c - (k - 1));
        TaggedComposition::with_copy(plain(v), far, 1)
    } else {
        v.push(c + 1);
        TaggedComposition::new(plain(v), near)
    })
}

/// Inverse of [`ca_ge_even_forward`].
pub fn ca_ge_even_backward(k: u32, t: &TaggedComposition) -> Result<TaggedComposition> {
    check_k(k)?;
    let [even, shifted] = ca_ge_even_domain(k);
    let [near, far] = ca_ge_even_codomain(k);
    if t.label != near && t.label != far {
        return Err(Error::InvalidInput(format!(
            "{} is not a summand of the codomain",
            t.label.symbolic()
        )));
    }
    t.validate()?;
    let f = Family::ca_ge(k);

    if k == 1 {
        if t.label == far && t.copy == 1 {
            return Ok(TaggedComposition::new(t.comp.clone(), shifted));
        }
        let offset = if t.label == near { 2 } else { 3 };
        let pre = TaggedComposition::new(t.comp.clone(), SetLabel::whole(f, offset));
        return Ok(TaggedComposition::new(even_backward_for(f, &pre)?, even));
    }

    let mut v = t.comp.plain_values()?;
    let odd = v.len() % 2 == 1;
    if t.label == near {
        if !odd {
            let len = v.len();
            if len == 0 {
                return Err(Error::Precondition(
                    "the even split needs n >= 3; CA≥k(0) has no preimage".into(),
                ));
            }
            v[len - 2] += 1;
            v[len - 1] += 1;
            return Ok(TaggedComposition::new(plain(v), even));
        }
        let c = v.pop().expect("odd length");
        return Ok(if c > k - 1 {
            v.extend([c + 1, 1]);
            TaggedComposition::new(plain(v), even)
        } else {
            // c == 1 leaves a zero, which `plain` removes.
            v.push(c - 1);
            TaggedComposition::new(plain(v), shifted)
        });
    }

    Ok(match (t.copy, odd) {
        (1, false) => {
            v.push(k - 1);
            TaggedComposition::new(plain(v), shifted)
        }
        (1, true) => {
            *v.last_mut().expect("odd") += k - 1;
            TaggedComposition::new(plain(v), shifted)
        }
        (_, false) => {
            v.extend([1, k + 1]);
            TaggedComposition::new(plain(v), even)
        }
        (_, true) => {
            let c = v.pop().expect("odd");
            v.extend([1, c + k + 1]);
            TaggedComposition::new(plain(v), even)
        }
    })
}
