mod common;

use carlitz_arndt::bijections::{ca_ge_to_pell, ca_le_to_q, no11_to_ca, pell_to_ca_ge, q_to_ca_le};
use carlitz_arndt::series::signature_for_family;
use carlitz_arndt::{comp, count_up_to, enumerate, Family, FamilyKind};
use common::{bijection_listings, c, check_pairing, cs, enumeration_listings};
use num_bigint::BigUint;

#[test]
fn shorthand_helper() {
    assert_eq!(c("1^42"), comp![1, 1, 1, 1, 2]);
    assert_eq!(c("(10)"), comp![10]);
    assert_eq!(c("(1')^42").to_string(), "1'1'1'1'2");
    assert_eq!(c("21'21"), "2,1',2,1".parse().unwrap());
}

#[test]
fn enumeration_listings_match_as_sets() {
    for listing in enumeration_listings() {
        for (n, members) in &listing.rows {
            let mut expected = cs(members);
            let mut got = enumerate(listing.family, *n);
            expected.sort();
            got.sort();
            assert_eq!(got, expected, "{} at n={n}", listing.family);
        }
    }
}

#[test]
fn ca_six_listing_in_canonical_order() {
    let got = enumerate(Family::CA, 6);
    let expected =
        cs("6, 51, 42, 411, 321, 312, 24, 231, 213, 2121, 2112, 15, 141, 132, 123, 1221, 1212");
    assert_eq!(got, expected);
}

fn check_count_table(kind: FamilyKind, table: &[([u64; 10], &str); 4]) {
    for (i, (row, sig)) in table.iter().enumerate() {
        let f = Family::new(kind, Some(i as u32 + 1)).unwrap();
        let counts = count_up_to(f, 10);
        let got: Vec<BigUint> = counts[1..].to_vec();
        let expected: Vec<BigUint> = row.iter().map(|&v| BigUint::from(v)).collect();
        assert_eq!(got, expected, "{f}");
        assert_eq!(signature_for_family(f).unwrap().0.to_string(), *sig);
    }
}

#[test]
fn count_tables() {
    check_count_table(FamilyKind::CaGeK, &common::CA_GE_TABLE);
    check_count_table(FamilyKind::CaLeK, &common::CA_LE_TABLE);
}

#[test]
fn bijection_listings_match_row_for_row() {
    for p in bijection_listings() {
        if let Err(e) = check_pairing(&p) {
            panic!("{e}");
        }
    }
}

#[test]
fn exactly_eleven_moved_at_eight() {
    let moved = enumerate(Family::CA, 8)
        .into_iter()
        .filter(|x| carlitz_arndt::bijections::ca_to_no11(x).unwrap() != *x)
        .count();
    assert_eq!(moved, 11);
    assert_eq!(enumerate(Family::CA, 8).len(), 57);
}

#[test]
fn worked_rewriting_example() {
    assert_eq!(
        no11_to_ca(&comp![2, 2, 2, 2, 2]).unwrap(),
        comp![2, 1, 1, 2, 2, 1, 1]
    );
}

#[test]
fn encoding_examples() {
    let x = comp![5, 2, 1, 3, 1];
    let px: carlitz_arndt::Composition = "1,1,1,2,2,1',1',2,1".parse().unwrap();
    assert_eq!(ca_ge_to_pell(2, &x).unwrap(), px);
    assert_eq!(pell_to_ca_ge(2, &px).unwrap(), x);
    let y = comp![1, 2, 4, 3, 1, 1, 4];
    let qy: carlitz_arndt::Composition = "1',2,1,6,2,1,1,1,1".parse().unwrap();
    assert_eq!(ca_le_to_q(1, &y).unwrap(), qy);
    assert_eq!(q_to_ca_le(1, &qy).unwrap(), y);
}
