use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bijections::{BijectionId, BijectionName};
use crate::composition::Composition;
use crate::enumerate::{count, count_up_to, enumerate};
use crate::error::Error;
use crate::family::Family;
use crate::series::{
    extend, gf_for_family, gf_for_family_form, signature_for_family, signature_for_family_form,
    GfForm, RationalGF, SignatureForm,
};

use super::audit::audit_bijection;
use super::brute::BruteForce;
use super::report::{Failure, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Enumeration,
    Bijections,
    Series,
    Sanity,
    All,
}

impl Suite {
    pub const EACH: [Suite; 4] = [
        Suite::Enumeration,
        Suite::Bijections,
        Suite::Series,
        Suite::Sanity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Enumeration => "enumeration",
            Suite::Bijections => "bijections",
            Suite::Series => "series",
            Suite::Sanity => "sanity",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite, Error> {
        [Suite::All]
            .into_iter()
            .chain(Suite::EACH)
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown suite {s:?}")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Size limits for the verification suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    /// Largest `n` for unmarked families.
    pub n_max: u32,
    /// Largest `n` for `P≥k` and `Q≤k`.
    pub n_max_marked: u32,
    pub k_max: u32,
    /// Largest `n` for the GF / recurrence / constructive / brute-force agreement.
    pub series_n_max: u32,
    /// Terms compared between equivalent closed forms.
    pub form_terms: usize,
    pub form_k_max: u32,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            n_max: 18,
            n_max_marked: 16,
            k_max: 4,
            series_n_max: 25,
            form_terms: 64,
            form_k_max: 6,
        }
    }
}

impl Bounds {
    /// Every weight bound set to `n`.
    pub fn with_n_max(n: u32) -> Bounds {
        Bounds {
            n_max: n,
            n_max_marked: n,
            series_n_max: n,
            ..Bounds::default()
        }
    }

    fn brute(&self) -> BruteForce {
        BruteForce::with_bounds(self.n_max.max(self.series_n_max), self.n_max_marked)
    }
}

pub fn run_suite(suite: Suite, bounds: &Bounds) -> Vec<VerificationReport> {
    match suite {
        Suite::Enumeration => vec![oracle_equivalence(bounds), structure(bounds)],
        Suite::Bijections => vec![bijection_audits(bounds)],
        Suite::Series => vec![triple_agreement(bounds), closed_forms(bounds)],
        Suite::Sanity => vec![sanity(bounds)],
        Suite::All => Suite::EACH
            .iter()
            .flat_map(|&s| run_suite(s, bounds))
            .collect(),
    }
}

/// Every family exercised by the suites for `k ≤ k_max`.
pub fn suite_families(k_max: u32) -> Vec<Family> {
    let mut fs = vec![
        Family::ALL,
        Family::CA,
        Family::NO_ADJACENT_ONES,
        Family::ARNDT_STRICT,
    ];
    for k in 0..=k_max {
        fs.push(Family::ca_ge(k));
    }
    for k in 1..=k_max {
        fs.extend([
            Family::ca_le(k).unwrap(),
            Family::pell_ge(k).unwrap(),
            Family::q_le(k).unwrap(),
        ]);
    }
    fs
}

/// Every bijection exercised by the suites for `k ≤ k_max`.
pub fn suite_bijections(k_max: u32) -> Vec<BijectionId> {
    let mut ids = vec![
        BijectionId::CA_ODD_SPLIT,
        BijectionId::CA_EVEN_SPLIT,
        BijectionId::CA_TO_NO11,
    ];
    for k in 1..=k_max {
        for name in [
            BijectionName::CaGeOddSplit,
            BijectionName::CaGeEvenSplit,
            BijectionName::CaGeToPell,
            BijectionName::CaLeToQ,
            BijectionName::QLast1,
            BijectionName::QLastEven,
        ] {
            ids.push(BijectionId::with_k(name, k));
        }
    }
    ids
}

fn failure(n: u32, f: Family, c: Option<Composition>, message: String) -> Failure {
    Failure {
        n,
        k: f.k(),
        composition: c,
        message: format!("{f}: {message}"),
    }
}

fn n_max_for(f: Family, b: &Bounds) -> u32 {
    if f.is_marked() {
        b.n_max_marked
    } else {
        b.n_max
    }
}

/// Constructive enumeration against brute force, cell by cell.
pub fn enumeration_cell(f: Family, n: u32, brute: &BruteForce) -> VerificationReport {
    let mut r = VerificationReport::new(format!("enumeration {f} n={n}"));
    let got = enumerate(f, n);
    let expected = match brute.enumerate(f, n) {
        Ok(e) => e,
        Err(e) => {
            r.fail(failure(n, f, None, e.to_string()));
            return r;
        }
    };
    let descending = got.windows(2).all(|w| w[0] > w[1]);
    r.check(descending, || {
        failure(n, f, None, "output not strictly descending".into())
    });
    if got != expected {
        let mut a = got.clone();
        let mut b = expected.clone();
        a.sort();
        b.sort();
        let witness = a
            .iter()
            .find(|c| b.binary_search(c).is_err())
            .or_else(|| b.iter().find(|c| a.binary_search(c).is_err()))
            .cloned();
        let msg = match &witness {
            Some(c) if a.binary_search(c).is_ok() => "generated but rejected by brute force",
            Some(_) => "accepted by brute force but not generated",
            None => "duplicate output",
        };
        r.fail(failure(n, f, witness, msg.into()));
    } else {
        r.checks += 1;
    }
    let c = count(f, n);
    r.check(c == BigUint::from(expected.len()), || {
        failure(
            n,
            f,
            None,
            format!("count {c} but {} members", expected.len()),
        )
    });
    r
}

fn oracle_equivalence(b: &Bounds) -> VerificationReport {
    let brute = b.brute();
    let cells: Vec<(Family, u32)> = suite_families(b.k_max)
        .into_iter()
        .flat_map(|f| (0..=n_max_for(f, b)).map(move |n| (f, n)))
        .collect();
    let mut r = VerificationReport::new("enumeration: constructive = brute force");
    for cell in cells
        .par_iter()
        .map(|&(f, n)| enumeration_cell(f, n, &brute))
        .collect::<Vec<_>>()
    {
        r.merge(cell);
    }
    r.finish()
}

fn subset_check(r: &mut VerificationReport, small: Family, big: Family, n: u32) {
    for c in enumerate(small, n) {
        let ok = big.contains(&c).unwrap_or(false);
        if !r.check(ok, || {
            failure(n, small, Some(c.clone()), format!("not in {big}"))
        }) {
            return;
        }
    }
}

fn structure(b: &Bounds) -> VerificationReport {
    let mut r = VerificationReport::new("enumeration: nesting, identities, saturation");
    for n in 0..=b.n_max {
        let all = enumerate(Family::ALL, n);
        let expected = if n == 0 {
            BigUint::from(1u8)
        } else {
            BigUint::from(1u8) << (n - 1)
        };
        r.check(BigUint::from(all.len()) == expected, || {
            failure(n, Family::ALL, None, format!("{} compositions", all.len()))
        });
        r.check(enumerate(Family::ca_ge(0), n) == all, || {
            failure(
                n,
                Family::ca_ge(0),
                None,
                "differs from all compositions".into(),
            )
        });
        r.check(
            enumerate(Family::ca_ge(1), n) == enumerate(Family::CA, n),
            || failure(n, Family::ca_ge(1), None, "differs from CA".into()),
        );
        r.check(enumerate(Family::CA, n) == enumerate(Family::CA, n), || {
            failure(
                n,
                Family::CA,
                None,
                "enumeration is not deterministic".into(),
            )
        });
        for k in 0..b.k_max {
            subset_check(&mut r, Family::ca_ge(k + 1), Family::ca_ge(k), n);
        }
        for k in 1..=b.k_max {
            let le = Family::ca_le(k).unwrap();
            let up = if k < b.k_max {
                Family::ca_le(k + 1).unwrap()
            } else {
                Family::ALL
            };
            subset_check(&mut r, le, up, n);
            if n >= 1 && n <= k + 3 {
                let full = BigUint::from(1u8) << (n - 1);
                let expected = if n == k + 3 { full - 2u8 } else { full };
                let c = count(le, n);
                r.check(c == expected, || {
                    failure(n, le, None, format!("count {c}, expected {expected}"))
                });
            }
        }
    }
    r.finish()
}

fn bijection_audits(b: &Bounds) -> VerificationReport {
    let cells: Vec<(BijectionId, u32)> = suite_bijections(b.k_max)
        .into_iter()
        .flat_map(|id| {
            let top = if id.name().is_marked() {
                b.n_max_marked
            } else {
                b.n_max
            };
            (id.min_n()..=top).map(move |n| (id, n))
        })
        .collect();
    let mut r = VerificationReport::new("bijections: audits");
    for cell in cells
        .par_iter()
        .map(|&(id, n)| audit_bijection(id, n))
        .collect::<Vec<_>>()
    {
        r.merge(cell);
    }
    r.finish()
}

/// Families with a closed-form GF and recurrence.
pub fn series_families(k_max: u32) -> Vec<Family> {
    let mut fs = vec![Family::CA];
    fs.extend((1..=k_max).map(Family::ca_ge));
    fs.extend((1..=k_max).map(|k| Family::ca_le(k).unwrap()));
    fs
}

/// GF coefficients, recurrence, constructive counts and brute-force counts
/// for `n = 1..=n_max` as rows `[gf, rec, dp, brute]`; brute-force entries are
/// `None` beyond the brute-force bound.
pub fn series_table(
    families: &[Family],
    n_max: u32,
    brute: &BruteForce,
) -> Result<Vec<Vec<[Option<BigInt>; 4]>>, Error> {
    let brute_counts: Vec<Option<Vec<u64>>> = (1..=n_max)
        .into_par_iter()
        .map(|n| brute.counts(families, n).ok())
        .collect();
    families
        .iter()
        .enumerate()
        .map(|(i, &f)| {
            let gf = gf_for_family(f)?.coefficients(n_max as usize)?;
            let (sig, init) = signature_for_family(f)?;
            let rec = extend(&sig, &init, n_max as usize)?;
            let dp = count_up_to(f, n_max);
            Ok((1..=n_max)
                .map(|n| {
                    [
                        gf.get(n as usize).cloned(),
                        rec.get(n as usize).cloned(),
                        Some(BigInt::from(dp[n as usize].clone())),
                        brute_counts[n as usize - 1]
                            .as_ref()
                            .map(|c| BigInt::from(c[i])),
                    ]
                })
                .collect())
        })
        .collect()
}

fn triple_agreement(b: &Bounds) -> VerificationReport {
    let mut r = VerificationReport::new("series: GF = recurrence = enumeration = brute force");
    let families = series_families(b.k_max);
    let table = match series_table(&families, b.series_n_max, &b.brute()) {
        Ok(t) => t,
        Err(e) => {
            r.fail(failure(0, Family::CA, None, e.to_string()));
            return r;
        }
    };
    for (f, rows) in families.iter().zip(table) {
        for (i, row) in rows.iter().enumerate() {
            let n = i as u32 + 1;
            let ok = row.iter().all(|v| v.is_some()) && row.iter().all(|v| v == &row[0]);
            r.check(ok, || {
                let show: Vec<String> = row
                    .iter()
                    .map(|v| v.as_ref().map_or("-".into(), BigInt::to_string))
                    .collect();
                failure(n, *f, None, format!("gf/rec/dp/brute = {}", show.join("/")))
            });
        }
    }
    r.finish()
}

fn closed_forms(b: &Bounds) -> VerificationReport {
    let mut r = VerificationReport::new("series: equivalent forms and initial values");
    let terms = b.form_terms;
    for k in 1..=b.form_k_max {
        let le = Family::ca_le(k).unwrap();
        let p = gf_for_family_form(le, GfForm::Primary).unwrap();
        let q = gf_for_family_form(le, GfForm::Reduced).unwrap();
        let (pc, qc) = (
            p.coefficients(terms).unwrap(),
            q.coefficients(terms).unwrap(),
        );
        r.check(pc == qc && p.same_function(&q), || {
            failure(0, le, None, "primary and reduced GFs differ".into())
        });
        let (ds, di) = signature_for_family_form(le, SignatureForm::Dense).unwrap();
        let (ss, si) = signature_for_family_form(le, SignatureForm::Sparse).unwrap();
        let dense = extend(&ds, &di, terms).unwrap();
        let sparse = extend(&ss, &si, terms).unwrap();
        r.check(
            dense == sparse && dense.slice(1, terms) == pc.slice(1, terms),
            || failure(0, le, None, "dense and sparse recurrences differ".into()),
        );

        let ge = Family::ca_ge(k);
        let g = gf_for_family(ge).unwrap().coefficients(terms).unwrap();
        let (gs, gi) = signature_for_family(ge).unwrap();
        r.check(
            extend(&gs, &gi, terms).unwrap().slice(1, terms) == g.slice(1, terms),
            || failure(0, ge, None, "recurrence and GF differ".into()),
        );

        let dp = count_up_to(ge, k + 2);
        for n in 1..=k + 2 {
            let expected = BigUint::from(if n == k + 2 { 3u8 } else { 1u8 });
            r.check(dp[n as usize] == expected, || {
                failure(
                    n,
                    ge,
                    None,
                    format!("count {}, expected {expected}", dp[n as usize]),
                )
            });
        }
        let dp = count_up_to(le, k + 3);
        for n in 1..=k + 3 {
            let full = BigUint::from(1u8) << (n - 1);
            let expected = if n == k + 3 { full - 2u8 } else { full };
            r.check(dp[n as usize] == expected, || {
                failure(
                    n,
                    le,
                    None,
                    format!("count {}, expected {expected}", dp[n as usize]),
                )
            });
        }
        let expected = RationalGF::ca_ge_formula(k);
        r.check(gf_for_family(ge).unwrap() == expected, || {
            failure(0, ge, None, "unexpected closed form".into())
        });
    }
    let ge0 = gf_for_family(Family::ca_ge(0))
        .unwrap()
        .coefficients(terms)
        .unwrap();
    let all = count_up_to(Family::ALL, terms as u32);
    let all: Vec<BigInt> = all.into_iter().map(BigInt::from).collect();
    r.check(ge0.slice(0, terms) == all, || {
        failure(0, Family::ca_ge(0), None, "GF differs from 2^(n-1)".into())
    });
    r.finish()
}

fn sanity(b: &Bounds) -> VerificationReport {
    let mut r = VerificationReport::new("sanity: Fibonacci, Pell, equinumerosity");
    let brute = b.brute();
    let n_max = b.n_max;

    let (mut f1, mut f2) = (1u64, 1u64);
    for n in 1..=n_max {
        if n > 2 {
            (f1, f2) = (f2, f1 + f2);
        }
        let fib = if n <= 2 { 1 } else { f2 };
        let a = Family::ARNDT_STRICT;
        let bc = brute.count(a, n).unwrap_or(u64::MAX);
        let dp = count(a, n);
        r.check(bc == fib && dp == BigUint::from(fib), || {
            failure(
                n,
                a,
                None,
                format!("brute {bc}, constructive {dp}, Fibonacci {fib}"),
            )
        });
    }

    let (mut p0, mut p1) = (1u64, 2u64);
    for n in 0..=b.n_max_marked {
        let pell = if n == 0 { p0 } else { p1 };
        if n > 0 {
            (p0, p1) = (p1, 2 * p1 + p0);
        }
        let words = brute.pell_words(n).unwrap_or(u64::MAX);
        r.check(words == pell, || {
            failure(
                n,
                Family::ALL,
                None,
                format!("{words} words over {{1,1',2}}, Pell {pell}"),
            )
        });
    }

    for n in 0..=n_max {
        let c = brute
            .counts(&[Family::CA, Family::NO_ADJACENT_ONES], n)
            .unwrap_or_default();
        r.check(c.len() == 2 && c[0] == c[1], || {
            failure(
                n,
                Family::NO_ADJACENT_ONES,
                None,
                format!("counts {c:?} differ from CA"),
            )
        });
    }
    for k in 1..=b.k_max {
        for n in 0..=b.n_max_marked {
            for (lhs, rhs) in [
                (Family::ca_ge(k), Family::pell_ge(k).unwrap()),
                (Family::ca_le(k).unwrap(), Family::q_le(k).unwrap()),
            ] {
                let c = brute.counts(&[lhs, rhs], n).unwrap_or_default();
                r.check(c.len() == 2 && c[0] == c[1], || {
                    failure(n, rhs, None, format!("counts {c:?} differ from {lhs}"))
                });
            }
        }
    }
    r.finish()
}
