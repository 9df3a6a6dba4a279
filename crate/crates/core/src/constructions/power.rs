use std::collections::HashMap;

use super::colimit::{colimit, InductiveSystem};
use super::product::{decode, direct_power, encode};
use crate::algebra::{boolean_center, Elem, FiniteAlgebra, FiniteBoundedLattice, FiniteResiduatedLattice, Kind, Structure, Table};
use crate::error::{Error, Result};
use crate::morphism::{find_isomorphism, Morphism, SearchOptions};
use crate::par;
use crate::report::Report;
use crate::reticulation::reticulate;

/// Largest Boolean power carrier [`boolean_power`] will build.
pub const POWER_LIMIT: usize = 4096;

fn atoms_of(b: &FiniteBoundedLattice) -> Result<Vec<Elem>> {
    let center = boolean_center(b);
    if let Some(e) = b.elements().find(|&e| !center.contains(e)) {
        return Err(Error::NotBoolean { element: e });
    }
    Ok(b.covers().into_iter().filter(|&(lo, _)| lo == b.bot()).map(|(_, hi)| hi).collect())
}

/// `A[B]`: maps `X: A → B` with pairwise disjoint values joining to 1, with
/// `f(X_1, X_2)(a) = ⋁ { X_1(a_1) ^ X_2(a_2) : f(a_1, a_2) = a }`.
#[derive(Clone, Debug)]
pub struct BooleanPower<T> {
    pub algebra: T,
    /// Atoms of `B`, in increasing index order.
    pub atoms: Vec<Elem>,
    /// Member `i` as the function `A → B`.
    pub functions: Vec<Vec<Elem>>,
}

/// Members are enumerated through their atom decomposition: an assignment
/// `v` of an element of `A` to each atom gives `X(a) = ⋁ { t : v(t) = a }`.
/// The operation tables then come from the defining formula itself.
pub fn boolean_power<T: FiniteAlgebra>(a: &T, b: &FiniteBoundedLattice) -> Result<BooleanPower<T>> {
    let atoms = atoms_of(b)?;
    let n = a.size();
    let radix = vec![n; atoms.len()];
    let m = radix
        .iter()
        .try_fold(1usize, |acc, &r| acc.checked_mul(r).filter(|&p| p <= POWER_LIMIT))
        .ok_or(Error::SizeLimitExceeded {
            what: "Boolean power",
            size: n.saturating_pow(atoms.len() as u32),
            limit: POWER_LIMIT,
        })?;
    let functions: Vec<Vec<Elem>> = (0..m)
        .map(|x| {
            let v = decode(x, &radix);
            (0..n)
                .map(|e| {
                    atoms
                        .iter()
                        .zip(&v)
                        .filter(|&(_, &ve)| ve == e)
                        .fold(b.bot(), |acc, (&t, _)| b.join(acc, t))
                })
                .collect()
        })
        .collect();
    let index: HashMap<&[Elem], usize> = functions.iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect();
    let constant = |c: Elem| -> Vec<Elem> { (0..n).map(|e| if e == c { b.top() } else { b.bot() }).collect() };
    let lookup = |f: &[Elem]| {
        index
            .get(f)
            .copied()
            .ok_or_else(|| Error::Invariant(format!("{f:?} is not a member of A[B]")))
    };
    let mut tables = Vec::new();
    for &op in T::KIND.operations() {
        let cells = par::map(m * m, |i| {
            let (x, y) = (&functions[i / m], &functions[i % m]);
            let mut out = vec![b.bot(); n];
            for a1 in 0..n {
                for a2 in 0..n {
                    let e = a.apply(op, a1, a2);
                    out[e] = b.join(out[e], b.meet(x[a1], y[a2]));
                }
            }
            lookup(&out)
        });
        tables.push(Table::from_cells(m, cells.into_iter().collect::<Result<Vec<_>>>()?));
    }
    let names = (0..m)
        .map(|x| {
            let v: Vec<&str> = decode(x, &radix).into_iter().map(|e| a.name(e)).collect();
            format!("[{}]", v.join("|"))
        })
        .collect();
    let s = Structure::new(names, tables, lookup(&constant(a.bot()))?, lookup(&constant(a.top()))?)?;
    Ok(BooleanPower {
        algebra: T::from_structure(s)?,
        atoms,
        functions,
    })
}

/// The inductive system over the finite partitions `P(B)` of 1, ordered by
/// refinement, with `A^p` the direct power over the blocks of `p` and
/// `f_pq(X)(y) = X(k_pq(y))`, where `k_pq(y)` is the block of `p` above `y`.
#[derive(Clone, Debug)]
pub struct PartitionSystem<T> {
    /// Each partition as its blocks (elements of `B`), coarsest first.
    pub partitions: Vec<Vec<Elem>>,
    pub system: InductiveSystem<T>,
}

/// Set partitions of `0..k` as restricted growth strings.
fn set_partitions(k: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        let next = prefix.iter().max().map_or(0, |m| m + 1);
        for b in 0..=next {
            prefix.push(b);
            go(prefix, k, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), k, &mut out);
    out
}

pub fn partition_system<T: FiniteAlgebra>(a: &T, b: &FiniteBoundedLattice) -> Result<PartitionSystem<T>> {
    let atoms = atoms_of(b)?;
    let mut partitions: Vec<Vec<Elem>> = set_partitions(atoms.len())
        .into_iter()
        .map(|rgs| {
            let blocks = rgs.iter().max().map_or(0, |m| m + 1);
            let mut p: Vec<Elem> = (0..blocks)
                .map(|blk| {
                    atoms
                        .iter()
                        .zip(&rgs)
                        .filter(|&(_, &r)| r == blk)
                        .fold(b.bot(), |acc, (&t, _)| b.join(acc, t))
                })
                .collect();
            p.sort_unstable();
            p
        })
        .collect();
    // B with no atoms is the one-element algebra, where 1 = 0 is its own
    // (empty-joinand) partition.
    if partitions.iter().all(|p| p.is_empty()) {
        partitions = vec![vec![b.top()]];
    }
    partitions.sort_by_key(|p| (p.len(), p.clone()));

    let powers = partitions
        .iter()
        .map(|p| direct_power(a, p.len()).map(|(x, _)| x))
        .collect::<Result<Vec<T>>>()?;
    let mut edges = Vec::new();
    for (pi, p) in partitions.iter().enumerate() {
        for (qi, q) in partitions.iter().enumerate() {
            if pi == qi {
                continue;
            }
            let k_pq: Option<Vec<usize>> = q
                .iter()
                .map(|&y| p.iter().position(|&x| b.leq(y, x)))
                .collect();
            let Some(k_pq) = k_pq else { continue };
            let (rp, rq) = (vec![a.size(); p.len()], vec![a.size(); q.len()]);
            let map = (0..powers[pi].size())
                .map(|x| {
                    let c = decode(x, &rp);
                    let d: Vec<Elem> = k_pq.iter().map(|&blk| c[blk]).collect();
                    encode(&d, &rq)
                })
                .collect();
            edges.push((pi, qi, Morphism::new(T::KIND, map)));
        }
    }
    Ok(PartitionSystem {
        partitions,
        system: InductiveSystem::new(powers, edges)?,
    })
}

/// Checks the defining invariants of the members of `A[B]` and that the
/// inductive limit over `P(B)` is isomorphic to `A[B]`.
pub fn check_partition_colimit<T: FiniteAlgebra>(a: &T, b: &FiniteBoundedLattice, opts: &SearchOptions) -> Result<Report> {
    let power = boolean_power(a, b)?;
    let mut r = Report::new(format!("inductive limit over P(B), |B| = {}", b.size()));
    let bad = power.functions.iter().position(|x| {
        let joined = x.iter().fold(b.bot(), |acc, &v| b.join(acc, v));
        let disjoint = (0..x.len()).all(|i| (0..i).all(|j| b.meet(x[i], x[j]) == b.bot()));
        joined != b.top() || !disjoint
    });
    r.check(
        "members have disjoint values joining to 1",
        bad.map(|i| power.algebra.name(i).to_string()),
    );
    r.check(
        format!("|A[B]| = |A|^{}", power.atoms.len()),
        (Some(power.algebra.size()) != a.size().checked_pow(power.atoms.len() as u32))
            .then(|| format!("{} elements", power.algebra.size())),
    );
    let ps = partition_system(a, b)?;
    let c = colimit(&ps.system)?;
    let iso = find_isomorphism(&c.algebra, &power.algebra, T::KIND, opts)?;
    r.check(
        "colimit of the partition system ≅ A[B]",
        iso.is_none().then(|| format!("{} vs {} elements", c.algebra.size(), power.algebra.size())),
    );
    Ok(r)
}

/// Checks `L(A[B]) ≅ L(A)[B]`.
pub fn check_boolean_power_preservation(
    a: &FiniteResiduatedLattice,
    b: &FiniteBoundedLattice,
    opts: &SearchOptions,
) -> Result<Report> {
    let power = boolean_power(a, b)?;
    let lp = reticulate(&power.algebra)?;
    let la = reticulate(a)?;
    let la_b = boolean_power(la.lattice(), b)?;
    let iso = find_isomorphism(lp.lattice(), &la_b.algebra, Kind::BoundedLattice, opts)?;
    let mut r = Report::new(format!("reticulation of a Boolean power, |B| = {}", b.size()));
    r.check(
        "L(A[B]) ≅ L(A)[B]",
        iso.is_none().then(|| format!("{} vs {} elements", lp.lattice().size(), la_b.algebra.size())),
    );
    Ok(r)
}
