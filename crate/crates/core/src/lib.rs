//! Integer compositions under pairwise Carlitz–Arndt style constraints.
//!
//! * [`family`]: constraint families and membership tests.
//! * [`enumerate`](mod@enumerate): constructive enumeration and exact counts.
//! * [`bijections`]: forward/backward maps between families.
//! * [`series`]: rational generating functions and linear recurrences.
//! * [`oracle`]: brute-force ground truth, bijection audits, b-file checks.
//!
//! ```
//! use carlitz_arndt::{count, enumerate, Family};
//! use carlitz_arndt::bijections::ca_ge_to_pell;
//!
//! let ca3: Vec<String> = enumerate(Family::CA, 3).iter().map(|c| c.to_string()).collect();
//! assert_eq!(ca3, ["3", "21", "12"]);
//! assert_eq!(count(Family::ca_ge(2), 10).to_string(), "65");
//!
//! let c = "5,2,1,3,1".parse().unwrap();
//! assert_eq!(ca_ge_to_pell(2, &c).unwrap().to_string(), "111221'1'21");
//! ```

pub mod bijections;
pub mod composition;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod oracle;
pub mod series;
pub mod tagged;

pub use bijections::{BijectionId, BijectionName};
pub use composition::{Composition, Part};
pub use enumerate::{count, count_up_to, enumerate};
pub use error::{Error, Result};
pub use family::{is_member, Family, FamilyKind};
pub use tagged::{SetLabel, Subset, TaggedComposition};
