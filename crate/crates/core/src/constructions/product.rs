use crate::algebra::{Elem, FiniteAlgebra, FiniteBoundedLattice, FiniteResiduatedLattice, Kind, Structure, Table};
use crate::error::{Error, Result};
use crate::morphism::{find_isomorphism, Morphism, SearchOptions};
use crate::par;
use crate::report::Report;
use crate::reticulation::{check_reticulation_axioms, reticulate};

/// Largest product carrier [`direct_product`] will build.
pub const PRODUCT_LIMIT: usize = 4096;

/// Mixed-radix decoding with the first factor most significant.
pub(crate) fn decode(mut x: usize, sizes: &[usize]) -> Vec<Elem> {
    let mut out = vec![0; sizes.len()];
    for (slot, &n) in out.iter_mut().zip(sizes).rev() {
        *slot = x % n;
        x /= n;
    }
    out
}

pub(crate) fn encode(coords: &[Elem], sizes: &[usize]) -> usize {
    coords.iter().zip(sizes).fold(0, |acc, (&c, &n)| acc * n + c)
}

/// The componentwise product and its projections. The empty product is the
/// one-element algebra.
pub fn direct_product<T: FiniteAlgebra>(factors: &[&T]) -> Result<(T, Vec<Morphism>)> {
    let sizes: Vec<usize> = factors.iter().map(|f| f.size()).collect();
    let n = sizes
        .iter()
        .try_fold(1usize, |acc, &s| acc.checked_mul(s).filter(|&p| p <= PRODUCT_LIMIT))
        .ok_or(Error::SizeLimitExceeded {
            what: "direct product",
            size: sizes.iter().fold(1usize, |a, &s| a.saturating_mul(s)),
            limit: PRODUCT_LIMIT,
        })?;
    let coords: Vec<Vec<Elem>> = (0..n).map(|x| decode(x, &sizes)).collect();
    let tables = T::KIND
        .operations()
        .iter()
        .map(|&op| {
            let cells = par::map(n * n, |i| {
                let (x, y) = (&coords[i / n], &coords[i % n]);
                let c: Vec<Elem> = factors
                    .iter()
                    .enumerate()
                    .map(|(k, f)| f.apply(op, x[k], y[k]))
                    .collect();
                encode(&c, &sizes)
            });
            Table::from_cells(n, cells)
        })
        .collect();
    let names = coords
        .iter()
        .map(|c| match factors {
            [] => "1".to_string(),
            [f] => f.name(c[0]).to_string(),
            _ => {
                let parts: Vec<&str> = factors.iter().zip(c).map(|(f, &e)| f.name(e)).collect();
                format!("({})", parts.join(","))
            }
        })
        .collect();
    let bot: Vec<Elem> = factors.iter().map(|f| f.bot()).collect();
    let top: Vec<Elem> = factors.iter().map(|f| f.top()).collect();
    let s = Structure::new(names, tables, encode(&bot, &sizes), encode(&top, &sizes))?;
    let product = T::from_structure(s)?;
    let projections = (0..factors.len())
        .map(|k| Morphism::new(T::KIND, coords.iter().map(|c| c[k]).collect()))
        .collect();
    Ok((product, projections))
}

/// `A^k` with pointwise operations.
pub fn direct_power<T: FiniteAlgebra>(a: &T, k: usize) -> Result<(T, Vec<Morphism>)> {
    direct_product(&vec![a; k])
}

/// For `A = A_1 × ... × A_n`, checks that `λ(a_1..a_n) = (λ_1(a_1)..λ_n(a_n))`
/// makes `∏ L(A_i)` a reticulation of `A`, and that `L(A) ≅ ∏ L(A_i)`.
pub fn check_product_preservation(factors: &[&FiniteResiduatedLattice], opts: &SearchOptions) -> Result<Report> {
    let (product, projections) = direct_product(factors)?;
    let rets = factors.iter().map(|a| reticulate(a)).collect::<Result<Vec<_>>>()?;
    let lattices: Vec<&FiniteBoundedLattice> = rets.iter().map(|r| r.lattice()).collect();
    let (lprod, _) = direct_product(&lattices)?;
    let sizes: Vec<usize> = lattices.iter().map(|l| l.size()).collect();
    let lambda: Vec<Elem> = product
        .elements()
        .map(|x| {
            let c: Vec<Elem> = projections
                .iter()
                .zip(&rets)
                .map(|(p, r)| r.lambda_of(p.apply(x)))
                .collect();
            encode(&c, &sizes)
        })
        .collect();
    let mut r = Report::new(format!("reticulation of a product of {} factors", factors.len()));
    r.extend("product λ: ", check_reticulation_axioms(&product, &lprod, &lambda));
    let lp = reticulate(&product)?;
    let iso = find_isomorphism(lp.lattice(), &lprod, Kind::BoundedLattice, opts)?;
    r.check(
        "L(∏A_i) ≅ ∏L(A_i)",
        iso.is_none().then(|| format!("no isomorphism ({} vs {} elements)", lp.lattice().size(), lprod.size())),
    );
    Ok(r)
}
