//! Constructive enumeration and counting.
//!
//! Each family is described by a small state machine that extends a prefix
//! one chunk at a time (a whole pair for the pair-structured families, a
//! single part otherwise). Enumeration walks the machine depth first and
//! counting memoises the number of completions per `(state, remaining)`.
//! Moves are produced largest-first, so enumeration comes out in descending
//! lexicographic order without sorting.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::composition::{Composition, Part};
use crate::family::{Family, FamilyKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum State {
    /// Pair families: between pairs.
    PairBoundary,
    /// Pair families: the unpaired trailing part has been placed.
    Closed,
    /// No adjacent ones: whether the previous part was a 1.
    Free { after_one: bool },
    /// Marked alphabets, before the first part.
    Start,
    /// Inside a run of ones; `len` saturates at `k + 1`.
    Units { marked: bool, len: u32 },
    /// Marked alphabets, after a 2 (Pell) or an even part (Q).
    AfterEven,
}

struct Move {
    parts: [Part; 2],
    len: u8,
    next: State,
}

impl Move {
    fn one(p: Part, next: State) -> Move {
        Move {
            parts: [p, p],
            len: 1,
            next,
        }
    }

    fn pair(a: u32, b: u32) -> Move {
        Move {
            parts: [Part::plain(a), Part::plain(b)],
            len: 2,
            next: State::PairBoundary,
        }
    }

    fn chunk(&self) -> &[Part] {
        &self.parts[..self.len as usize]
    }

    fn weight(&self) -> u32 {
        self.chunk().iter().map(|p| p.value()).sum()
    }
}

struct Machine {
    family: Family,
    k: u32,
    pair_condition: Option<fn(u32, u32, u32) -> bool>,
}

impl Machine {
    fn new(family: Family) -> Machine {
        Machine {
            family,
            k: family.k_or_zero(),
            pair_condition: family.pair_condition(),
        }
    }

    fn start(&self) -> State {
        match self.family.kind() {
            FamilyKind::NoAdjacentOnes => State::Free { after_one: false },
            FamilyKind::PellGeK => State::Start,
            FamilyKind::QLeK => State::AfterEven,
            _ => State::PairBoundary,
        }
    }

    fn accepting(&self, s: State) -> bool {
        match s {
            State::Units { marked, .. } => !marked,
            _ => true,
        }
    }

    fn units_next(&self, s: State, marked: bool) -> State {
        let len = match s {
            State::Units { marked: m, len } if m == marked => (len + 1).min(self.k + 1),
            _ => 1,
        };
        State::Units { marked, len }
    }

    /// Moves from `s` with `remaining` weight left, largest first.
    fn moves(&self, s: State, remaining: u32) -> Vec<Move> {
        let mut out = Vec::new();
        if remaining == 0 {
            return out;
        }
        let k = self.k;
        match s {
            State::Closed => {}
            State::PairBoundary => {
                let cond = self.pair_condition.expect("pair family");
                out.push(Move::one(Part::plain(remaining), State::Closed));
                for a in (1..remaining).rev() {
                    for b in (1..=remaining - a).rev() {
                        if cond(a, b, k) {
                            out.push(Move::pair(a, b));
                        }
                    }
                }
            }
            State::Free { after_one } => {
                for v in (1..=remaining).rev() {
                    if !(v == 1 && after_one) {
                        out.push(Move::one(Part::plain(v), State::Free { after_one: v == 1 }));
                    }
                }
            }
            _ if self.family.kind() == FamilyKind::PellGeK => {
                self.pell_moves(s, remaining, &mut out)
            }
            _ => self.q_moves(s, remaining, &mut out),
        }
        out
    }

    fn pell_moves(&self, s: State, remaining: u32, out: &mut Vec<Move>) {
        let (may_two, ones) = match s {
            State::Start => (false, [true, true]),
            State::AfterEven => (true, [true, true]),
            State::Units { marked, len } => (len >= self.k, [!marked, marked]),
            _ => unreachable!(),
        };
        if may_two && remaining >= 2 {
            out.push(Move::one(Part::plain(2), State::AfterEven));
        }
        self.push_units(s, ones, out);
    }

    fn q_moves(&self, s: State, remaining: u32, out: &mut Vec<Move>) {
        let (may_even, ones) = match s {
            State::AfterEven => (true, [true, true]),
            State::Units { marked, len } => (len <= self.k, [!marked, marked]),
            _ => unreachable!(),
        };
        if may_even {
            for v in (2..=remaining).rev().filter(|v| v % 2 == 0) {
                out.push(Move::one(Part::plain(v), State::AfterEven));
            }
        }
        self.push_units(s, ones, out);
    }

    /// `ones` = [unmarked allowed, marked allowed]; marked goes first.
    fn push_units(&self, s: State, ones: [bool; 2], out: &mut Vec<Move>) {
        if ones[1] {
            out.push(Move::one(Part::MARKED_ONE, self.units_next(s, true)));
        }
        if ones[0] {
            out.push(Move::one(Part::ONE, self.units_next(s, false)));
        }
    }

    /// Moves grouped by `(weight, next)` with multiplicities.
    fn counted_moves(
        &self,
        s: State,
        remaining: u32,
        pair_counts: &[u64],
    ) -> Vec<(u32, State, u64)> {
        if s == State::PairBoundary {
            let mut out = Vec::with_capacity(remaining as usize);
            if remaining >= 1 {
                out.push((remaining, State::Closed, 1));
            }
            for sum in 2..=remaining {
                let m = pair_counts[sum as usize];
                if m > 0 {
                    out.push((sum, State::PairBoundary, m));
                }
            }
            return out;
        }
        self.moves(s, remaining)
            .into_iter()
            .map(|m| (m.weight(), m.next, 1))
            .collect()
    }

    /// Number of pairs with each sum `0..=n` satisfying the pair condition.
    fn pair_counts(&self, n: u32) -> Vec<u64> {
        let Some(cond) = self.pair_condition else {
            return Vec::new();
        };
        (0..=n)
            .map(|s| (1..s).filter(|&a| cond(a, s - a, self.k)).count() as u64)
            .collect()
    }
}

/// Every member of `f` with weight `n`, each exactly once, in descending
/// lexicographic order of the part sequence.
pub fn enumerate(f: Family, n: u32) -> Vec<Composition> {
    let mut out = Vec::new();
    for_each(f, n, |parts| out.push(Composition::new(parts.to_vec())));
    out
}

/// Visits every member of `f` with weight `n` in canonical order without
/// materialising the whole list.
pub fn for_each(f: Family, n: u32, mut visit: impl FnMut(&[Part])) {
    let machine = Machine::new(f);
    let mut prefix = Vec::with_capacity(n as usize);
    walk(&machine, machine.start(), n, &mut prefix, &mut visit);
}

fn walk(
    m: &Machine,
    s: State,
    remaining: u32,
    prefix: &mut Vec<Part>,
    visit: &mut impl FnMut(&[Part]),
) {
    if remaining == 0 {
        if m.accepting(s) {
            visit(prefix);
        }
        return;
    }
    for mv in m.moves(s, remaining) {
        let w = mv.weight();
        if w > remaining {
            continue;
        }
        let len = prefix.len();
        prefix.extend_from_slice(mv.chunk());
        walk(m, mv.next, remaining - w, prefix, visit);
        prefix.truncate(len);
    }
}

/// `|enumerate(f, n)|`, computed without enumerating.
pub fn count(f: Family, n: u32) -> BigUint {
    count_up_to(f, n).pop().expect("non-empty")
}

/// Counts for every weight `0..=n_max`.
pub fn count_up_to(f: Family, n_max: u32) -> Vec<BigUint> {
    let machine = Machine::new(f);
    let pair_counts = machine.pair_counts(n_max);
    let mut memo = HashMap::new();
    let start = machine.start();
    (0..=n_max)
        .map(|n| completions(&machine, &pair_counts, start, n, &mut memo))
        .collect()
}

fn completions(
    m: &Machine,
    pair_counts: &[u64],
    s: State,
    remaining: u32,
    memo: &mut HashMap<(State, u32), BigUint>,
) -> BigUint {
    if remaining == 0 {
        return if m.accepting(s) {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    if let Some(v) = memo.get(&(s, remaining)) {
        return v.clone();
    }
    let mut total = BigUint::zero();
    for (w, next, mult) in m.counted_moves(s, remaining, pair_counts) {
        if w > remaining {
            continue;
        }
        let tail = completions(m, pair_counts, next, remaining - w, memo);
        if !tail.is_zero() {
            total += tail * mult;
        }
    }
    memo.insert((s, remaining), total.clone());
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp;

    fn shorthands(f: Family, n: u32) -> Vec<String> {
        enumerate(f, n).iter().map(|c| c.shorthand()).collect()
    }

    #[test]
    fn ca_small_weights_in_canonical_order() {
        assert_eq!(shorthands(Family::CA, 3), ["3", "21", "12"]);
        assert_eq!(shorthands(Family::CA, 4), ["4", "31", "211", "13", "121"]);
    }

    #[test]
    fn ca_ge_three_at_six() {
        assert_eq!(
            shorthands(Family::ca_ge(3), 6),
            ["6", "51", "411", "15", "141"]
        );
    }

    #[test]
    fn pell_ge_two_at_four() {
        let mut got = shorthands(Family::pell_ge(2).unwrap(), 4);
        got.sort();
        assert_eq!(got, ["1'1'2", "1111", "112"]);
    }

    #[test]
    fn weight_zero_is_the_empty_composition() {
        for kind in FamilyKind::ALL {
            let f = Family::new(kind, kind.takes_k().then_some(2)).unwrap();
            assert_eq!(enumerate(f, 0), vec![Composition::empty()]);
            assert_eq!(count(f, 0), BigUint::one());
        }
    }

    #[test]
    fn single_part_families() {
        assert_eq!(enumerate(Family::ALL, 1), vec![comp![1]]);
        assert_eq!(enumerate(Family::ca_ge(4), 5), vec![comp![5]]);
    }

    #[test]
    fn output_is_sorted_descending_and_members() {
        let fams = [
            Family::ALL,
            Family::CA,
            Family::ca_ge(2),
            Family::ca_le(1).unwrap(),
            Family::NO_ADJACENT_ONES,
            Family::pell_ge(1).unwrap(),
            Family::q_le(2).unwrap(),
            Family::ARNDT_STRICT,
        ];
        for f in fams {
            for n in 0..=9 {
                let list = enumerate(f, n);
                assert!(list.windows(2).all(|w| w[0] > w[1]), "{f} {n}");
                assert!(list
                    .iter()
                    .all(|c| c.weight() == n && f.contains(c).unwrap()));
                assert_eq!(BigUint::from(list.len()), count(f, n), "{f} {n}");
            }
        }
    }

    // Frozen from an independent brute-force filter over all compositions
    // (and all words over the marked alphabets).
    #[test]
    fn counts_match_frozen_brute_force_values() {
        let cases: &[(Family, &[u64])] = &[
            (
                Family::NO_ADJACENT_ONES,
                &[1, 1, 1, 3, 5, 9, 17, 31, 57, 105, 193, 355, 653],
            ),
            (
                Family::ARNDT_STRICT,
                &[1, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144],
            ),
            (
                Family::ca_ge(0),
                &[1, 1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024, 2048],
            ),
            (
                Family::ca_ge(4),
                &[1, 1, 1, 1, 1, 1, 3, 5, 9, 13, 19, 25, 37],
            ),
            (
                Family::ca_le(2).unwrap(),
                &[1, 1, 2, 4, 8, 14, 28, 52, 100, 188, 360, 680, 1296],
            ),
            (
                Family::pell_ge(3).unwrap(),
                &[1, 1, 1, 1, 1, 3, 5, 9, 13, 19, 29, 45, 73],
            ),
            (
                Family::q_le(1).unwrap(),
                &[1, 1, 2, 4, 6, 12, 20, 36, 64, 112, 200, 352, 624],
            ),
            (
                Family::q_le(4).unwrap(),
                &[1, 1, 2, 4, 8, 16, 32, 62, 124, 244, 484, 956, 1892],
            ),
        ];
        for (f, expected) in cases {
            let got = count_up_to(*f, 12);
            let expected: Vec<BigUint> = expected.iter().map(|&v| BigUint::from(v)).collect();
            assert_eq!(got, expected, "{f}");
        }
    }

    #[test]
    fn deterministic() {
        let f = Family::q_le(2).unwrap();
        assert_eq!(enumerate(f, 8), enumerate(f, 8));
    }
}
