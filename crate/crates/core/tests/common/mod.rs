//! Reference listings shared by the fixture tests and the acceptance run.
//!
//! Compositions are written in table shorthand with `^` for repetition:
//! `1^42` is `(1,1,1,1,2)` and `(1')^42` is `(1',1',1',1',2)`. A leading `(`
//! with commas is read as a list, e.g. `(10)`.

#![allow(dead_code)]

use std::collections::BTreeMap;

use carlitz_arndt::{BijectionId, BijectionName, Composition, Family, Part};

pub fn c(s: &str) -> Composition {
    let b = s.as_bytes();
    let mut parts = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let (part, len) = match b[i] {
            b'(' if s[i..].starts_with("(1')") => (Part::MARKED_ONE, 4),
            b'(' => {
                let close = s[i..].find(')').expect("closing paren") + i;
                let v: u32 = s[i + 1..close].parse().expect("number");
                (Part::plain(v), close - i + 1)
            }
            b'1' if b.get(i + 1) == Some(&b'\'') => (Part::MARKED_ONE, 2),
            d @ b'1'..=b'9' => (Part::plain(u32::from(d - b'0')), 1),
            _ => panic!("bad shorthand {s:?}"),
        };
        i += len;
        let mut reps = 1;
        if b.get(i) == Some(&b'^') {
            reps = usize::from(b[i + 1] - b'0');
            i += 2;
        }
        parts.extend(std::iter::repeat_n(part, reps));
    }
    Composition::new(parts)
}

pub fn cs(list: &str) -> Vec<Composition> {
    list.split(',').map(|s| c(s.trim())).collect()
}

pub struct Listing {
    pub family: Family,
    /// `(n, members)`.
    pub rows: Vec<(u32, &'static str)>,
}

pub fn enumeration_listings() -> Vec<Listing> {
    vec![
        Listing {
            family: Family::CA,
            rows: vec![
                (1, "1"),
                (2, "2"),
                (3, "3, 21, 12"),
                (4, "4, 31, 211, 13, 121"),
                (5, "5, 41, 32, 311, 23, 212, 14, 131, 122"),
                (6, "6, 51, 42, 411, 321, 312, 24, 231, 213, 2121, 2112, 15, 141, 132, 123, 1221, 1212"),
            ],
        },
        Listing {
            family: Family::NO_ADJACENT_ONES,
            rows: vec![
                (1, "1"),
                (2, "2"),
                (3, "3, 21, 12"),
                (4, "4, 31, 22, 13, 121"),
                (5, "5, 41, 32, 23, 221, 212, 14, 131, 122"),
            ],
        },
        Listing {
            family: Family::ca_ge(2),
            rows: vec![
                (1, "1"),
                (2, "2"),
                (3, "3"),
                (4, "4, 31, 13"),
                (5, "5, 41, 311, 14, 131"),
                (6, "6, 51, 42, 411, 312, 24, 15, 141, 132"),
            ],
        },
        Listing {
            family: Family::ca_ge(3),
            rows: vec![
                (1, "1"),
                (2, "2"),
                (3, "3"),
                (4, "4"),
                (5, "5, 41, 14"),
                (6, "6, 51, 411, 15, 141"),
            ],
        },
        Listing {
            family: Family::pell_ge(1).unwrap(),
            rows: vec![
                (1, "1"),
                (2, "11"),
                (3, "12, 1'2, 111"),
                (4, "121, 1'21, 112, 1'1'2, 1111"),
            ],
        },
        Listing {
            family: Family::pell_ge(2).unwrap(),
            rows: vec![(1, "1"), (2, "11"), (3, "111"), (4, "112, 1'1'2, 1111")],
        },
        Listing {
            family: Family::ca_le(1).unwrap(),
            rows: vec![
                (1, "1"),
                (2, "2, 11"),
                (3, "3, 21, 12, 111"),
                (4, "4, 22, 211, 121, 112, 1^4"),
            ],
        },
        Listing {
            family: Family::ca_le(2).unwrap(),
            rows: vec![
                (1, "1"),
                (2, "2, 11"),
                (3, "3, 21, 12, 111"),
                (4, "4, 31, 22, 211, 13, 121, 112, 1^4"),
            ],
        },
        // The printed weight-4 rows show `141` and `1'41`, which weigh 6;
        // the members are `121` and `1'21`.
        Listing {
            family: Family::q_le(1).unwrap(),
            rows: vec![
                (1, "1"),
                (2, "2, 11"),
                (3, "21, 12, 1'2, 111"),
                (4, "4, 22, 211, 121, 1'21, 1111"),
            ],
        },
        Listing {
            family: Family::q_le(2).unwrap(),
            rows: vec![
                (1, "1"),
                (2, "2, 11"),
                (3, "21, 12, 1'2, 111"),
                (4, "4, 22, 211, 121, 1'21, 112, 1'1'2, 1111"),
            ],
        },
    ]
}

/// `ca≥k(n)` for `k = 1..=4`, `n = 1..=10`, with signatures.
pub const CA_GE_TABLE: [([u64; 10], &str); 4] = [
    ([1, 1, 3, 5, 9, 17, 31, 57, 105, 193], "[1,1,1]"),
    ([1, 1, 1, 3, 5, 9, 13, 23, 37, 65], "[1,1,-1,2]"),
    ([1, 1, 1, 1, 3, 5, 9, 13, 19, 29], "[1,1,-1,0,2]"),
    ([1, 1, 1, 1, 1, 3, 5, 9, 13, 19], "[1,1,-1,0,0,2]"),
];

/// `ca≤k(n)` for `k = 1..=4`, `n = 1..=10`, with signatures.
pub const CA_LE_TABLE: [([u64; 10], &str); 4] = [
    ([1, 2, 4, 6, 12, 20, 36, 64, 112, 200], "[0,2,2]"),
    ([1, 2, 4, 8, 14, 28, 52, 100, 188, 360], "[0,2,2,2]"),
    ([1, 2, 4, 8, 16, 30, 60, 116, 228, 444], "[0,2,2,2,2]"),
    ([1, 2, 4, 8, 16, 32, 62, 124, 244, 484], "[0,2,2,2,2,2]"),
];

pub struct Pairing {
    pub name: &'static str,
    pub bijection: BijectionId,
    pub n: u32,
    /// Whether `rows` is the whole domain (otherwise only the moved elements).
    pub complete: bool,
    pub rows: Vec<(&'static str, &'static str)>,
}

fn id(name: BijectionName, k: u32) -> BijectionId {
    BijectionId::with_k(name, k)
}

pub fn bijection_listings() -> Vec<Pairing> {
    vec![
        Pairing {
            name: "odd split of CA(6)",
            bijection: BijectionId::CA_ODD_SPLIT,
            n: 6,
            complete: true,
            rows: vec![
                ("6", "5"),
                ("411", "41"),
                ("321", "32"),
                ("312", "311"),
                ("231", "23"),
                ("213", "212"),
                ("141", "14"),
                ("132", "131"),
                ("123", "122"),
            ],
        },
        Pairing {
            name: "even split of CA(6)",
            bijection: BijectionId::CA_EVEN_SPLIT,
            n: 6,
            complete: true,
            rows: vec![
                ("51", "4"),
                ("42", "31"),
                ("24", "13"),
                ("2121", "211"),
                ("2112", "21"),
                ("15", "3"),
                ("1221", "121"),
                ("1212", "12"),
            ],
        },
        Pairing {
            name: "CA(8) to no adjacent ones, moved elements",
            bijection: BijectionId::CA_TO_NO11,
            n: 8,
            complete: false,
            rows: vec![
                ("611", "44"),
                ("4112", "332"),
                ("3113", "2213"),
                ("2114", "224"),
                ("31121", "22121"),
                ("21131", "2231"),
                ("21122", "2222"),
                ("31211", "3122"),
                ("21311", "21221"),
                ("13211", "1322"),
                ("12311", "12221"),
            ],
        },
        Pairing {
            name: "odd split of CA≥3(10)",
            bijection: id(BijectionName::CaGeOddSplit, 3),
            n: 10,
            complete: true,
            rows: vec![
                ("(10)", "9"),
                ("811", "81"),
                ("721", "72"),
                ("712", "711"),
                ("631", "63"),
                ("622", "621"),
                ("613", "612"),
                ("523", "522"),
                ("514", "513"),
                ("415", "414"),
                ("361", "36"),
                ("271", "27"),
                ("262", "261"),
                ("253", "252"),
                ("181", "18"),
                ("172", "171"),
                ("163", "162"),
                ("154", "153"),
                ("145", "144"),
            ],
        },
        Pairing {
            name: "even split of CA≥3(10)",
            bijection: id(BijectionName::CaGeEvenSplit, 3),
            n: 10,
            complete: true,
            rows: vec![
                ("91", "8"),
                ("82", "71"),
                ("73", "62"),
                ("4141", "413"),
                ("4114", "41"),
                ("37", "26"),
                ("28", "17"),
                ("19", "5"),
                ("1441", "143"),
                ("1414", "14"),
                ("7", "5"),
                ("61", "611"),
                ("52", "521"),
                ("511", "512"),
                ("412", "41"),
                ("25", "251"),
                ("16", "161"),
                ("151", "152"),
                ("142", "14"),
            ],
        },
        Pairing {
            name: "CA≥2(6) to P≥2(6)",
            bijection: id(BijectionName::CaGeToPell, 2),
            n: 6,
            complete: true,
            rows: vec![
                ("6", "1^6"),
                ("51", "1^42"),
                ("42", "1122"),
                ("411", "11121"),
                ("312", "11211"),
                ("24", "1'1'22"),
                ("15", "(1')^42"),
                ("141", "1'1'1'21"),
                ("132", "1'1'211"),
            ],
        },
        Pairing {
            name: "CA≤1(5) to Q≤1(5)",
            bijection: id(BijectionName::CaLeToQ, 1),
            n: 5,
            complete: true,
            rows: vec![
                ("5", "1^5"),
                ("32", "14"),
                ("23", "1'4"),
                ("221", "41"),
                ("212", "1211"),
                ("2111", "122"),
                ("122", "1'211"),
                ("1211", "1'22"),
                ("113", "2111"),
                ("1121", "212"),
                ("1112", "21'2"),
                ("1^5", "221"),
            ],
        },
        Pairing {
            name: "Q≤1(6) ending in 1",
            bijection: id(BijectionName::QLast1, 1),
            n: 6,
            complete: true,
            rows: vec![
                ("411", "41"),
                ("2211", "221"),
                ("2121", "212"),
                ("21'21", "21'2"),
                ("21^4", "21^3"),
                ("141", "14"),
                ("1221", "122"),
                ("12111", "1211"),
                ("1'41", "1'4"),
                ("1'221", "1'22"),
                ("1'21^3", "1'211"),
                ("1^6", "1^5"),
            ],
        },
        Pairing {
            name: "Q≤1(6) ending in an even part, with two copies of Q≤1(2)",
            bijection: id(BijectionName::QLastEven, 1),
            n: 6,
            complete: true,
            rows: vec![
                ("6", "4"),
                ("42", "4"),
                ("24", "22"),
                ("222", "22"),
                ("1212", "121"),
                ("121'2", "121"),
                ("1'212", "1'21"),
                ("1'21'2", "1'21"),
                ("2", "211"),
                ("11", "1^4"),
                ("2", "211"),
                ("11", "1^4"),
            ],
        },
    ]
}

/// Multiset of `(domain, image)` compositions for `b` at `n`.
pub fn traced(b: BijectionId, n: u32) -> BTreeMap<(Composition, Composition), usize> {
    let mut out = BTreeMap::new();
    for x in b.domain(n) {
        let y = b.forward(&x).expect("forward");
        *out.entry((x.comp, y.comp)).or_insert(0) += 1;
    }
    out
}

/// Compares a listing with the traced bijection; `Err` describes the first
/// discrepancy.
pub fn check_pairing(p: &Pairing) -> Result<usize, String> {
    let got = traced(p.bijection, p.n);
    let mut expected = BTreeMap::new();
    for (x, y) in &p.rows {
        *expected.entry((c(x), c(y))).or_insert(0) += 1;
    }
    let got = if p.complete {
        got
    } else {
        got.into_iter().filter(|((x, y), _)| x != y).collect()
    };
    if got == expected {
        return Ok(p.rows.len());
    }
    for (pair, m) in &expected {
        if got.get(pair) != Some(m) {
            return Err(format!(
                "{}: expected {} ↦ {} ({m}×), got {:?}",
                p.name,
                pair.0,
                pair.1,
                got.get(pair)
            ));
        }
    }
    let extra = got
        .keys()
        .find(|k| !expected.contains_key(k))
        .expect("differs");
    Err(format!(
        "{}: unexpected pair {} ↦ {}",
        p.name, extra.0, extra.1
    ))
}
