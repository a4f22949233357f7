//! Concrete Hopf algebras: group algebras, function algebras, bismash
//! products and the Kac–Paljutkin algebra, plus the JSON fixture format.

mod bismash;
mod fixtures;
mod groups;
pub mod io;

pub use fixtures::{broken_fixture, generated_fixtures, FixtureFile, GENERATED};
pub use bismash::{bismash_product, function_part, s3_bismash, MatchedPair};
pub use groups::{dual_group_algebra, group_algebra, GroupPresentation};
pub use io::{load_group, load_hopf, save_group, save_hopf, HopfFixture, Strictness};

use crate::error::Result;
use crate::hopf::HopfAlgebra;

const H8_JSON: &str = include_str!("../../../../fixtures/H8.hopf.json");

/// The 8-dimensional Kac–Paljutkin algebra, loaded from its structure-constant
/// fixture and checked against the axioms.
///
/// Basis `1, x, y, xy, z, xz, yz, xyz` with `x² = y² = 1`, `xy = yx`,
/// `zx = yz`, `zy = xz`, `z² = ½(1 + x + y − xy)` and
/// `Δ(z) = ½(1⊗1 + 1⊗x + y⊗1 − y⊗x)(z⊗z)`.
pub fn kac_paljutkin_h8() -> HopfAlgebra {
    io::parse_hopf(H8_JSON, Strictness::Verify)
        .expect("bundled H8 fixture is a Hopf algebra")
        .0
}

/// Every algebra with a bundled generator, by fixture name.
pub fn catalogue() -> Vec<&'static str> {
    vec!["kZ2", "kZ3", "kZ4", "kS3", "k^S3", "k^Z3#kZ2", "H8"]
}

/// The algebra named `name` (see [`catalogue`]) and the group it comes from, if any.
pub fn by_name(name: &str) -> Result<(HopfAlgebra, Option<GroupPresentation>)> {
    let cyclic = |n: usize| -> Result<(HopfAlgebra, Option<GroupPresentation>)> {
        let g = GroupPresentation::cyclic(n);
        Ok((group_algebra(&g)?, Some(g)))
    };
    match name {
        "kZ2" => cyclic(2),
        "kZ3" => cyclic(3),
        "kZ4" => cyclic(4),
        "kS3" => {
            let g = GroupPresentation::symmetric3();
            Ok((group_algebra(&g)?, Some(g)))
        }
        "k^S3" => {
            let g = GroupPresentation::symmetric3();
            Ok((dual_group_algebra(&g)?, Some(g)))
        }
        "k^Z3#kZ2" => Ok((s3_bismash()?.1, None)),
        "H8" => Ok((kac_paljutkin_h8(), None)),
        other => Err(crate::Error::Precondition(format!("no bundled algebra named {other}"))),
    }
}
