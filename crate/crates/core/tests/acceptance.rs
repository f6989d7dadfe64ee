//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Every comparison is exact integer or set equality; the only
//! tolerances are the runtime limits below.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use carlitz_arndt::bijections::{ca_ge_to_pell, ca_le_to_q, ca_to_no11, no11_to_ca};
use carlitz_arndt::oracle::{
    compare_bfile, run_suite, series_families, series_table, BFile, Bounds, BruteForce, Suite,
};
use carlitz_arndt::series::{
    extend, gf_for_family_form, signature_for_family, signature_for_family_form, GfForm,
    SignatureForm,
};
use carlitz_arndt::{comp, count, count_up_to, enumerate, Composition, Family, FamilyKind};
use num_bigint::{BigInt, BigUint};

const TABLE_TIME_LIMIT: Duration = Duration::from_secs(5);
const TRIPLE_TIME_LIMIT: Duration = Duration::from_secs(60);
const TRIPLE_N_MAX: u32 = 25;
const TRIPLE_K_MAX: u32 = 4;
const AUDIT_N_MAX: u32 = 18;
const AUDIT_N_MAX_MARKED: u32 = 16;
const AUDIT_K_MAX: u32 = 4;
const BFILE_MIN_OVERLAP: u32 = 25;
const SANITY_N_MAX: u32 = 18;
const FORM_TERMS: usize = 64;
const FORM_K_MAX: u32 = 6;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn count_tables() -> Outcome {
    let start = Instant::now();
    for (kind, table) in [
        (FamilyKind::CaGeK, &common::CA_GE_TABLE),
        (FamilyKind::CaLeK, &common::CA_LE_TABLE),
    ] {
        for (i, (row, sig)) in table.iter().enumerate() {
            let f = Family::new(kind, Some(i as u32 + 1)).map_err(|e| e.to_string())?;
            let counts = count_up_to(f, 10);
            for (j, &v) in row.iter().enumerate() {
                ensure(counts[j + 1] == BigUint::from(v), || {
                    format!("{f} at n={}: {} != {v}", j + 1, counts[j + 1])
                })?;
            }
            let got = signature_for_family(f)
                .map_err(|e| e.to_string())?
                .0
                .to_string();
            ensure(got == *sig, || format!("{f} signature {got} != {sig}"))?;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < TABLE_TIME_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!("80 cells and 8 signatures in {elapsed:.2?}"))
}

fn enumeration_fixtures() -> Outcome {
    let mut cells = 0;
    for listing in common::enumeration_listings() {
        for (n, members) in &listing.rows {
            let mut expected = common::cs(members);
            let mut got = enumerate(listing.family, *n);
            expected.sort();
            got.sort();
            ensure(got == expected, || format!("{} at n={n}", listing.family))?;
            cells += 1;
        }
    }
    let ordered = common::cs(
        "6, 51, 42, 411, 321, 312, 24, 231, 213, 2121, 2112, 15, 141, 132, 123, 1221, 1212",
    );
    ensure(enumerate(Family::CA, 6) == ordered, || {
        "CA(6) listing order".into()
    })?;
    Ok(format!("{cells} listings, CA(6) element-for-element"))
}

fn bijection_fixtures() -> Outcome {
    let mut rows = 0;
    for p in common::bijection_listings() {
        rows += common::check_pairing(&p)?;
    }
    let moved = enumerate(Family::CA, 8)
        .iter()
        .filter(|x| ca_to_no11(x).map(|y| &y != *x).unwrap_or(true))
        .count();
    ensure(moved == 11, || format!("{moved} moved compositions at n=8"))?;
    ensure(
        no11_to_ca(&comp![2, 2, 2, 2, 2]).ok() == Some(comp![2, 1, 1, 2, 2, 1, 1]),
        || "rewriting example".into(),
    )?;
    let parse = |s: &str| s.parse::<Composition>().map_err(|e| e.to_string());
    ensure(
        ca_ge_to_pell(2, &comp![5, 2, 1, 3, 1]).ok() == Some(parse("1,1,1,2,2,1',1',2,1")?),
        || "P≥2 encoding of (5,2,1,3,1)".into(),
    )?;
    ensure(
        ca_le_to_q(1, &comp![1, 2, 4, 3, 1, 1, 4]).ok() == Some(parse("1',2,1,6,2,1,1,1,1")?),
        || "Q≤1 encoding of (1,2,4,3,1,1,4)".into(),
    )?;
    Ok(format!("{rows} rows, 11 moved at n=8, 3 worked examples"))
}

fn triple_agreement() -> Outcome {
    let start = Instant::now();
    let families = series_families(TRIPLE_K_MAX);
    let brute = BruteForce::with_bounds(TRIPLE_N_MAX, 0);
    let table = series_table(&families, TRIPLE_N_MAX, &brute).map_err(|e| e.to_string())?;
    for (f, rows) in families.iter().zip(&table) {
        for (i, row) in rows.iter().enumerate() {
            let n = i + 1;
            ensure(row.iter().all(|v| v.is_some() && v == &row[0]), || {
                format!("{f} at n={n}: gf/rec/dp/brute = {row:?}")
            })?;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < TRIPLE_TIME_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{} families, n=1..={TRIPLE_N_MAX}, in {elapsed:.2?}",
        families.len()
    ))
}

fn bijection_audits() -> Outcome {
    let bounds = Bounds {
        n_max: AUDIT_N_MAX,
        n_max_marked: AUDIT_N_MAX_MARKED,
        k_max: AUDIT_K_MAX,
        ..Bounds::default()
    };
    let r = run_suite(Suite::Bijections, &bounds).remove(0);
    ensure(r.passed(), || r.to_string())?;
    Ok(format!("{} checks", r.checks))
}

fn oeis_agreement() -> Outcome {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data");
    let mut summary = Vec::new();
    for (file, f) in [
        ("b000213.txt", Family::CA),
        ("b107383.txt", Family::ca_le(1).map_err(|e| e.to_string())?),
    ] {
        let b = BFile::read(format!("{dir}/{file}")).map_err(|e| e.to_string())?;
        let top = b.max_index().unwrap_or(0);
        ensure(top >= BFILE_MIN_OVERLAP, || format!("{file} ends at {top}"))?;
        let r = compare_bfile(f, &b, None);
        ensure(r.passed(), || r.to_string())?;
        summary.push(format!("{file} n=0..={top}"));
    }
    Ok(summary.join(", "))
}

fn sanity_sequences() -> Outcome {
    let brute = BruteForce::with_bounds(SANITY_N_MAX, SANITY_N_MAX);
    let arndt: Vec<u64> = (0..=SANITY_N_MAX)
        .map(|n| brute.count(Family::ARNDT_STRICT, n))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    ensure(arndt[1] == 1 && arndt[2] == 1, || {
        "Fibonacci initial values".into()
    })?;
    for n in 3..=SANITY_N_MAX as usize {
        ensure(arndt[n] == arndt[n - 1] + arndt[n - 2], || {
            format!("Fibonacci at n={n}")
        })?;
        ensure(
            count(Family::ARNDT_STRICT, n as u32) == BigUint::from(arndt[n]),
            || format!("constructive Arndt count at n={n}"),
        )?;
    }
    let pell: Vec<u64> = (0..=SANITY_N_MAX)
        .map(|n| brute.pell_words(n))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    ensure(pell[0] == 1 && pell[1] == 2, || {
        "Pell initial values".into()
    })?;
    for n in 2..=SANITY_N_MAX as usize {
        ensure(pell[n] == 2 * pell[n - 1] + pell[n - 2], || {
            format!("Pell at n={n}")
        })?;
    }
    Ok(format!(
        "Fibonacci to {}, Pell to {}",
        arndt[SANITY_N_MAX as usize], pell[SANITY_N_MAX as usize]
    ))
}

fn form_equivalence() -> Outcome {
    for k in 1..=FORM_K_MAX {
        let le = Family::ca_le(k).map_err(|e| e.to_string())?;
        let coeffs = |form| {
            gf_for_family_form(le, form)
                .and_then(|g| g.coefficients(FORM_TERMS - 1))
                .map_err(|e| e.to_string())
        };
        let (p, r) = (coeffs(GfForm::Primary)?, coeffs(GfForm::Reduced)?);
        ensure(p.values().len() == FORM_TERMS && p == r, || {
            format!("k={k}: GF forms differ")
        })?;
        let (ds, di) =
            signature_for_family_form(le, SignatureForm::Dense).map_err(|e| e.to_string())?;
        let (ss, si) =
            signature_for_family_form(le, SignatureForm::Sparse).map_err(|e| e.to_string())?;
        let top = FORM_TERMS - 1;
        let dense = extend(&ds, &di, top).map_err(|e| e.to_string())?;
        let sparse = extend(&ss, &si, top).map_err(|e| e.to_string())?;
        ensure(
            dense == sparse && dense.slice(1, top) == p.slice(1, top),
            || format!("k={k}: recurrences disagree with the GF"),
        )?;

        let ge = count_up_to(Family::ca_ge(k), k + 2);
        ensure(
            ge[1..=k as usize + 1]
                .iter()
                .all(|v| *v == BigUint::from(1u8)),
            || format!("ca≥{k}(n) = 1 for n ≤ {}", k + 1),
        )?;
        ensure(ge[k as usize + 2] == BigUint::from(3u8), || {
            format!("ca≥{k}({}) = {}", k + 2, ge[k as usize + 2])
        })?;
        let lec = count_up_to(le, k + 3);
        let expected = (BigUint::from(1u8) << (k + 2)) - 2u8;
        ensure(lec[k as usize + 3] == expected, || {
            format!("ca≤{k}({}) = {} != {expected}", k + 3, lec[k as usize + 3])
        })?;
        for n in 1..=k + 2 {
            ensure(lec[n as usize] == BigUint::from(1u8) << (n - 1), || {
                format!("ca≤{k}({n}) != 2^{}", n - 1)
            })?;
        }
        ensure(
            p.get(k as usize + 3) == Some(&BigInt::from(expected)),
            || format!("k={k}: GF coefficient at n={}", k + 3),
        )?;
    }
    Ok(format!("{FORM_TERMS} terms, k=1..={FORM_K_MAX}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("count tables for ca≥k and ca≤k", count_tables),
        ("enumeration listings", enumeration_fixtures),
        ("bijection listings and worked examples", bijection_fixtures),
        (
            "GF = recurrence = enumeration = brute force",
            triple_agreement,
        ),
        ("bijection audits", bijection_audits),
        ("OEIS b-file agreement", oeis_agreement),
        ("Fibonacci and Pell sanity sequences", sanity_sequences),
        ("equivalent GF forms and initial values", form_equivalence),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
