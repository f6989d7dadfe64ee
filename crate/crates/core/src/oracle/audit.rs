use crate::bijections::BijectionId;
use crate::tagged::TaggedComposition;

use super::report::{Failure, VerificationReport};

/// Checks one bijection at union weight `n`: both directions defined on
/// every element, membership of images, weight preserved, both round
/// trips, and the multiset of images equal to the other side.
pub fn audit_bijection(id: BijectionId, n: u32) -> VerificationReport {
    let mut r = VerificationReport::new(format!("audit {id} n={n}"));
    let domain = id.domain(n);
    let codomain = id.codomain(n);
    let dl = id.domain_labels();
    let cl = id.codomain_labels();
    let fail = |c: &TaggedComposition, message: String| Failure {
        n,
        k: id.k(),
        composition: Some(c.comp.clone()),
        message: format!("{id}: {message}"),
    };

    let mut images = Vec::with_capacity(domain.len());
    for x in &domain {
        let y = match id.forward(x) {
            Ok(y) => y,
            Err(e) => {
                r.fail(fail(x, format!("forward failed on {x}: {e}")));
                continue;
            }
        };
        let valid = y.validate().is_ok() && cl.contains(&y.label);
        r.check(valid, || {
            fail(x, format!("forward image {y} is not in the codomain"))
        });
        r.check(y.n() == n, || {
            fail(x, format!("forward image {y} has weight {}", y.n()))
        });
        match id.backward(&y) {
            Ok(back) => {
                r.check(&back == x, || {
                    fail(x, format!("backward(forward) gives {back}"))
                });
            }
            Err(e) => r.fail(fail(x, format!("backward failed on image {y}: {e}"))),
        }
        images.push(y);
    }

    let mut preimages = Vec::with_capacity(codomain.len());
    for y in &codomain {
        let x = match id.backward(y) {
            Ok(x) => x,
            Err(e) => {
                r.fail(fail(y, format!("backward failed on {y}: {e}")));
                continue;
            }
        };
        let valid = x.validate().is_ok() && dl.contains(&x.label);
        r.check(valid, || {
            fail(y, format!("backward image {x} is not in the domain"))
        });
        r.check(x.n() == n, || {
            fail(y, format!("backward image {x} has weight {}", x.n()))
        });
        match id.forward(&x) {
            Ok(fwd) => {
                r.check(&fwd == y, || {
                    fail(y, format!("forward(backward) gives {fwd}"))
                });
            }
            Err(e) => r.fail(fail(y, format!("forward failed on preimage {x}: {e}"))),
        }
        preimages.push(x);
    }

    let mut expected = codomain;
    expected.sort();
    images.sort();
    let size = |len: usize, msg: &str| Failure {
        n,
        k: id.k(),
        composition: None,
        message: format!("{id}: {msg} ({len} elements)"),
    };
    r.check(images == expected, || {
        size(images.len(), "forward images differ from the codomain")
    });
    let mut expected = domain;
    expected.sort();
    preimages.sort();
    r.check(preimages == expected, || {
        size(preimages.len(), "backward images differ from the domain")
    });
    r.finish()
}
