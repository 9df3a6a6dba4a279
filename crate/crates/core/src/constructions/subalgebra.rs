use crate::algebra::{Elem, FiniteAlgebra, FiniteBoundedLattice, FiniteResiduatedLattice, Structure, Table};
use crate::error::{Error, Result};
use crate::morphism::{check_morphism, Morphism};
use crate::par;
use crate::report::Report;
use crate::reticulation::{check_reticulation_axioms, reticulate};

/// Largest carrier [`closed_subsets`] scans.
const SCAN_MAX: usize = 20;

fn first_escape<T: FiniteAlgebra>(host: &T, inside: &[bool], members: &[Elem]) -> Option<Error> {
    for &op in T::KIND.operations() {
        for &a in members {
            for &b in members {
                let c = host.apply(op, a, b);
                if !inside[c] {
                    return Some(Error::NotClosed {
                        op: op.name(),
                        a,
                        b,
                        result: c,
                    });
                }
            }
        }
    }
    None
}

/// The subalgebra on `elems` (in increasing order) and its inclusion map.
pub fn subalgebra<T: FiniteAlgebra>(host: &T, elems: &[Elem]) -> Result<(T, Morphism)> {
    let n = host.size();
    let mut inside = vec![false; n];
    for &e in elems {
        if e >= n {
            return Err(Error::Shape(format!("element {e} out of range")));
        }
        inside[e] = true;
    }
    if !inside[host.bot()] || !inside[host.top()] {
        return Err(Error::Shape("a subalgebra must contain bot and top".into()));
    }
    let members: Vec<Elem> = (0..n).filter(|&e| inside[e]).collect();
    if let Some(e) = first_escape(host, &inside, &members) {
        return Err(e);
    }
    let mut index = vec![usize::MAX; n];
    for (i, &e) in members.iter().enumerate() {
        index[e] = i;
    }
    let k = members.len();
    let tables = T::KIND
        .operations()
        .iter()
        .map(|&op| Table::from_fn(k, |i, j| index[host.apply(op, members[i], members[j])]))
        .collect();
    let names = members.iter().map(|&e| host.name(e).to_string()).collect();
    let s = Structure::new(names, tables, index[host.bot()], index[host.top()])?;
    let sub = T::from_structure(s)?;
    let inclusion = Morphism::new(T::KIND, members);
    check_morphism(&sub, host, &inclusion)?;
    Ok((sub, inclusion))
}

/// Every subset containing bot and top that is closed under all operations.
pub fn closed_subsets<T: FiniteAlgebra>(host: &T) -> Result<Vec<Vec<Elem>>> {
    let n = host.size();
    if n > SCAN_MAX {
        return Err(Error::SizeLimitExceeded {
            what: "closed subset scan",
            size: n,
            limit: SCAN_MAX,
        });
    }
    let fixed = (1usize << host.bot()) | (1usize << host.top());
    let free: Vec<Elem> = (0..n).filter(|&e| e != host.bot() && e != host.top()).collect();
    let hits = par::filter_indices(1usize << free.len(), |m| {
        let mut mask = fixed;
        for (i, &e) in free.iter().enumerate() {
            if m >> i & 1 == 1 {
                mask |= 1 << e;
            }
        }
        let inside: Vec<bool> = (0..n).map(|e| mask >> e & 1 == 1).collect();
        let members: Vec<Elem> = (0..n).filter(|&e| inside[e]).collect();
        first_escape(host, &inside, &members).is_none()
    });
    let mut out: Vec<Vec<Elem>> = hits
        .into_iter()
        .map(|m| {
            let mut v: Vec<Elem> = free
                .iter()
                .enumerate()
                .filter(|&(i, _)| m >> i & 1 == 1)
                .map(|(_, &e)| e)
                .chain([host.bot(), host.top()])
                .collect();
            v.sort_unstable();
            v.dedup();
            v
        })
        .collect();
    out.sort_by_key(|v| (v.len(), v.clone()));
    Ok(out)
}

/// For a subalgebra `B ⊆ A`, checks that `(λ(B), λ|B)` is a reticulation of `B`.
pub fn check_subalgebra_preservation(a: &FiniteResiduatedLattice, elems: &[Elem]) -> Result<Report> {
    let (b, inclusion) = subalgebra(a, elems)?;
    let r = reticulate(a)?;
    let mut image: Vec<Elem> = inclusion.map().iter().map(|&x| r.lambda_of(x)).collect();
    image.sort_unstable();
    image.dedup();
    let (lb, lb_inclusion): (FiniteBoundedLattice, Morphism) = subalgebra(r.lattice(), &image)?;
    let lambda_b: Vec<Elem> = inclusion
        .map()
        .iter()
        .map(|&x| lb_inclusion.map().iter().position(|&y| y == r.lambda_of(x)).expect("in the image"))
        .collect();
    let mut rep = Report::new(format!("reticulation of the subalgebra {}", a.format_set(elems.iter().copied())));
    rep.extend("λ|B: ", check_reticulation_axioms(&b, &lb, &lambda_b));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn not_closed_witness() {
        let i5 = fixtures::iorgulescu5();
        let e = |s| i5.element(s).unwrap();
        let err = subalgebra(&i5, &[e("0"), e("a"), e("1")]).unwrap_err();
        // oracle: scan every operation over the subset for an escaping result
        let set = [e("0"), e("a"), e("1")];
        let escapes: Vec<(Elem, Elem, Elem)> = set
            .iter()
            .flat_map(|&x| set.iter().map(move |&y| (x, y)))
            .map(|(x, y)| (x, y, i5.imp(x, y)))
            .filter(|(_, _, z)| !set.contains(z))
            .collect();
        assert!(escapes.contains(&(e("a"), e("0"), e("b"))));
        assert!(matches!(err, Error::NotClosed { op: "imp", .. }));
    }

    #[test]
    fn trivial_subalgebras() {
        for (_, a) in fixtures::library() {
            let (two, _) = subalgebra(&a, &[a.bot(), a.top()]).unwrap();
            assert_eq!(two.structure(), fixtures::godel_chain(2).structure());
            let all: Vec<Elem> = a.elements().collect();
            let (same, inc) = subalgebra(&a, &all).unwrap();
            assert_eq!(same.structure(), a.structure());
            assert_eq!(inc.map(), &all[..]);
        }
    }

    #[test]
    fn closed_subsets_match_direct_checks() {
        let k = fixtures::kowalski6();
        let closed = closed_subsets(&k).unwrap();
        assert_eq!(closed.first().unwrap(), &vec![0, 5]);
        assert_eq!(closed.last().unwrap(), &(0..6).collect::<Vec<_>>());
        for s in &closed {
            assert!(subalgebra(&k, s).is_ok());
        }
        // every other subset with 0 and 1 is rejected
        let rejected = (0u32..16)
            .map(|m| {
                let mut v = vec![0, 5];
                v.extend((1..5).filter(|i| m >> (i - 1) & 1 == 1));
                v.sort();
                v
            })
            .filter(|v| !closed.contains(v))
            .count();
        assert_eq!(rejected + closed.len(), 16);
        for v in (0u32..16).map(|m| {
            let mut v = vec![0, 5];
            v.extend((1..5).filter(|i| m >> (i - 1) & 1 == 1));
            v.sort();
            v
        }) {
            assert_eq!(subalgebra(&k, &v).is_ok(), closed.contains(&v));
        }
    }

    #[test]
    fn preservation_on_every_closed_subset() {
        for a in [fixtures::kowalski6(), fixtures::iorgulescu5(), fixtures::godel_chain(4)] {
            for s in closed_subsets(&a).unwrap() {
                let r = check_subalgebra_preservation(&a, &s).unwrap();
                assert!(r.passed(), "{r}");
            }
        }
    }
}
