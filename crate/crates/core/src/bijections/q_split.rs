//! Splitting Q≤k by its last part:
//! Q^1≤k(n) ≅ Q≤k(n−1) and Q^e≤k(n) ∪ 2·Q≤k(n−k−3) ≅ 2·Q≤k(n−2).

use crate::composition::{Composition, Part};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::tagged::{SetLabel, Subset, TaggedComposition};

use super::require;

/// Drops the trailing unmarked 1.
pub fn q_last1_forward(k: u32, q: &Composition) -> Result<Composition> {
    let f = Family::q_le(k)?;
    if q.last() != Some(Part::ONE) {
        return Err(Error::Precondition(format!(
            "{} does not end in 1",
            q.list_form()
        )));
    }
    require(&SetLabel::new(f, Subset::LastOne, 0), q)?;
    let mut parts = q.clone().into_parts();
    parts.pop();
    Ok(Composition::new(parts))
}

/// Appends an unmarked 1.
pub fn q_last1_backward(k: u32, q: &Composition) -> Result<Composition> {
    require(&SetLabel::whole(Family::q_le(k)?, 0), q)?;
    let mut parts = q.clone().into_parts();
    parts.push(Part::ONE);
    Ok(Composition::new(parts))
}

/// Summands of `Q^e≤k(n) ∪ 2·Q≤k(n−k−3)`.
pub fn q_last_even_domain(k: u32) -> Result<[SetLabel; 2]> {
    let f = Family::q_le(k)?;
    Ok([
        SetLabel::new(f, Subset::LastEven, 0),
        SetLabel::doubled(f, Subset::Whole, k + 3),
    ])
}

/// The single summand `2·Q≤k(n−2)`.
pub fn q_last_even_codomain(k: u32) -> Result<SetLabel> {
    Ok(SetLabel::doubled(Family::q_le(k)?, Subset::Whole, 2))
}

fn terminal_run(parts: &[Part], end: usize) -> usize {
    match end.checked_sub(1).map(|i| parts[i]) {
        Some(p) => parts[..end].iter().rev().take_while(|&&q| q == p).count(),
        None => 0,
    }
}

/// `Q^e≤k(n) ∪ 2·Q≤k(n−k−3) → 2·Q≤k(n−2)`.
///
/// Writing a `Q^e` element as `(c, s^u, t)` with `s^u` its penultimate run:
/// `t = 2` drops the last part (copy 1, or copy 2 after turning a run of
/// `1'` into ones), `t > 2` lowers it by two (copy 2). Elements of either
/// copy of `Q≤k(n−k−3)` get `k+1` ones appended and keep their copy.
pub fn q_last_even_forward(k: u32, t: &TaggedComposition) -> Result<TaggedComposition> {
    let [even, shifted] = q_last_even_domain(k)?;
    let target = q_last_even_codomain(k)?;
    if t.label != even && t.label != shifted {
        return Err(Error::InvalidInput(format!(
            "{} is not a summand of the domain",
            t.label.symbolic()
        )));
    }
    t.validate()?;
    let mut parts = t.comp.clone().into_parts();

    if t.label == shifted {
        parts.extend(std::iter::repeat_n(Part::ONE, k as usize + 1));
        return Ok(TaggedComposition::with_copy(
            Composition::new(parts),
            target,
            t.copy,
        ));
    }

    let last = parts.pop().expect("ends in an even part").value();
    if last > 2 {
        parts.push(Part::plain(last - 2));
        return Ok(TaggedComposition::with_copy(
            Composition::new(parts),
            target,
            2,
        ));
    }
    let copy = if parts.last() == Some(&Part::MARKED_ONE) {
        let u = terminal_run(&parts, parts.len());
        let len = parts.len();
        parts[len - u..].fill(Part::ONE);
        2
    } else {
        1
    };
    Ok(TaggedComposition::with_copy(
        Composition::new(parts),
        target,
        copy,
    ))
}

/// Inverse of [`q_last_even_forward`].
pub fn q_last_even_backward(k: u32, t: &TaggedComposition) -> Result<TaggedComposition> {
    let [even, shifted] = q_last_even_domain(k)?;
    let target = q_last_even_codomain(k)?;
    if t.label != target {
        return Err(Error::InvalidInput(format!(
            "{} is not the codomain {}",
            t.label.symbolic(),
            target.symbolic()
        )));
    }
    t.validate()?;
    let mut parts = t.comp.clone().into_parts();
    let Some(last) = parts.last().copied() else {
        return Err(Error::Precondition(
            "the last-even split needs n >= 3; Q(0) has no preimage".into(),
        ));
    };
    let v = terminal_run(&parts, parts.len());
    let len = parts.len();

    if last == Part::ONE && v > k as usize {
        parts.truncate(len - (k as usize + 1));
        return Ok(TaggedComposition::with_copy(
            Composition::new(parts),
            shifted,
            t.copy,
        ));
    }
    match (t.copy, last.is_unit()) {
        (1, _) => parts.push(Part::plain(2)),
        (_, true) => {
            parts[len - v..].fill(Part::MARKED_ONE);
            parts.push(Part::plain(2));
        }
        (_, false) => parts[len - 1] = Part::plain(last.value() + 2),
    }
    Ok(TaggedComposition::new(Composition::new(parts), even))
}
