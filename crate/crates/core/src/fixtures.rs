//! Built-in example algebras.

use crate::algebra::FiniteResiduatedLattice;
use crate::io::parse_algebra;

pub const KOWALSKI6: &str = include_str!("../../../fixtures/kowalski6.alg");
pub const IORGULESCU5: &str = include_str!("../../../fixtures/iorgulescu5.alg");
pub const IORGULESCU12: &str = include_str!("../../../fixtures/iorgulescu12.alg");

fn load_builtin(text: &str) -> FiniteResiduatedLattice {
    parse_algebra(text)
        .and_then(|d| d.to_residuated())
        .expect("built-in fixture is valid")
}

/// `{0,a,b,c,d,1}` with `0 < d < c < a < 1`, `0 < b < a`. Five principal
/// filters, since `<c> = <d>`.
pub fn kowalski6() -> FiniteResiduatedLattice {
    load_builtin(KOWALSKI6)
}

/// `{0,a,b,c,1}` with product equal to meet: Stone, yet `~a v ~~a != 1`.
pub fn iorgulescu5() -> FiniteResiduatedLattice {
    load_builtin(IORGULESCU5)
}

/// `{0,n,a,b,i,f,g,h,j,c,d,1}`: satisfies `~a v ~~a = 1` but is not Stone.
pub fn iorgulescu12() -> FiniteResiduatedLattice {
    load_builtin(IORGULESCU12)
}

pub fn godel_chain(len: usize) -> FiniteResiduatedLattice {
    FiniteResiduatedLattice::godel_chain(len).expect("chains of positive length are valid")
}

/// Resolves `kowalski6`, `iorgulescu5`, `iorgulescu12` or `chain<k>` (k in 1..=64).
pub fn builtin(name: &str) -> Option<FiniteResiduatedLattice> {
    match name {
        "kowalski6" => Some(kowalski6()),
        "iorgulescu5" => Some(iorgulescu5()),
        "iorgulescu12" => Some(iorgulescu12()),
        other => {
            let k: usize = other.strip_prefix("chain")?.parse().ok()?;
            (1..=64).contains(&k).then(|| godel_chain(k))
        }
    }
}

/// The three named algebras followed by the Goedel chains of length 2 to 8.
pub fn library() -> Vec<(String, FiniteResiduatedLattice)> {
    let mut out = vec![
        ("kowalski6".to_string(), kowalski6()),
        ("iorgulescu5".to_string(), iorgulescu5()),
        ("iorgulescu12".to_string(), iorgulescu12()),
    ];
    out.extend((2..=8).map(|k| (format!("chain{k}"), godel_chain(k))));
    out
}
