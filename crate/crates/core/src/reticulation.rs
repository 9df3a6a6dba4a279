//! The reticulation `(L(A), λ)` of a finite residuated lattice, realized as
//! the lattice of principal filters with `λ(a) = <a>`, and the functor it
//! induces on morphisms.

use fixedbitset::FixedBitSet;

use crate::algebra::{Elem, FiniteAlgebra, FiniteBoundedLattice, FiniteResiduatedLattice, Kind, Structure, Table};
use crate::error::{Error, Result};
use crate::filters::{self, all_filters, principal_filter, Filter, FilterLattice};
use crate::morphism::{check_isomorphism, check_morphism, find_isomorphism, Morphism, SearchOptions};
use crate::report::Report;

/// A bounded distributive lattice together with the surjection `λ` from a
/// residuated lattice onto it.
#[derive(Clone, Debug)]
pub struct Reticulation {
    source: FiniteResiduatedLattice,
    lattice: FiniteBoundedLattice,
    lambda: Vec<Elem>,
    reps: Vec<Elem>,
}

impl Reticulation {
    /// Wraps an arbitrary pair `(L, λ)`, rejecting it unless the defining
    /// conditions and their consequences all hold.
    pub fn from_parts(
        source: FiniteResiduatedLattice,
        lattice: FiniteBoundedLattice,
        lambda: Vec<Elem>,
    ) -> Result<Self> {
        if lambda.len() != source.size() || lambda.iter().any(|&x| x >= lattice.size()) {
            return Err(Error::Shape("lambda must map the source carrier into the lattice".into()));
        }
        let report = check_reticulation_axioms(&source, &lattice, &lambda);
        if let Some(c) = report.failures().next() {
            return Err(Error::Invariant(format!("not a reticulation: {}: {}", c.name, c.detail)));
        }
        let mut reps = vec![usize::MAX; lattice.size()];
        for (a, &x) in lambda.iter().enumerate().rev() {
            reps[x] = a;
        }
        Ok(Reticulation {
            source,
            lattice,
            lambda,
            reps,
        })
    }

    pub fn source(&self) -> &FiniteResiduatedLattice {
        &self.source
    }

    pub fn lattice(&self) -> &FiniteBoundedLattice {
        &self.lattice
    }

    pub fn lambda(&self) -> &[Elem] {
        &self.lambda
    }

    #[inline]
    pub fn lambda_of(&self, a: Elem) -> Elem {
        self.lambda[a]
    }

    /// The least source element in the class of lattice element `x`.
    pub fn representative(&self, x: Elem) -> Elem {
        self.reps[x]
    }

    /// `<a>` for the representative `a` of lattice element `x`.
    pub fn principal_filter(&self, x: Elem) -> Filter {
        principal_filter(&self.source, self.reps[x])
    }

    /// `λ(X)` as a subset of the lattice.
    pub fn image(&self, xs: impl IntoIterator<Item = Elem>) -> FixedBitSet {
        filters::subset(&self.lattice, xs.into_iter().map(|a| self.lambda[a]))
    }

    /// `λ` as a map of bounded lattices out of the lattice reduct of the source.
    pub fn lambda_morphism(&self) -> Morphism {
        Morphism::new(Kind::BoundedLattice, self.lambda.clone())
    }

    /// Runs [`check_reticulation_axioms`] and, in addition, compares the
    /// lattice order with reverse inclusion of principal filters.
    pub fn check_axioms(&self) -> Report {
        let mut r = check_reticulation_axioms(&self.source, &self.lattice, &self.lambda);
        let k = self.lattice.size();
        let pf: Vec<Filter> = (0..k).map(|x| self.principal_filter(x)).collect();
        let bad = (0..k)
            .flat_map(|x| (0..k).map(move |y| (x, y)))
            .find(|&(x, y)| self.lattice.leq(x, y) != pf[y].is_subset(&pf[x]));
        r.check(
            "order is reverse inclusion of principal filters",
            bad.map(|(x, y)| format!("at {}, {}", self.lattice.name(x), self.lattice.name(y))),
        );
        r
    }
}

/// Builds `L(A) = PF(A)`: one lattice element per distinct principal filter,
/// labelled `<a>` by its least generator, with meet `λ(a*b)` and join `λ(a v b)`.
pub fn reticulate(a: &FiniteResiduatedLattice) -> Result<Reticulation> {
    let n = a.size();
    let mut classes: Vec<Filter> = Vec::new();
    let mut reps: Vec<Elem> = Vec::new();
    let mut lambda = vec![0; n];
    for x in 0..n {
        let f = principal_filter(a, x);
        lambda[x] = match classes.iter().position(|g| *g == f) {
            Some(i) => i,
            None => {
                classes.push(f);
                reps.push(x);
                classes.len() - 1
            }
        };
    }
    let k = reps.len();
    let names = reps.iter().map(|&r| format!("<{}>", a.name(r))).collect();
    let tables = vec![
        Table::from_fn(k, |i, j| lambda[a.join(reps[i], reps[j])]),
        Table::from_fn(k, |i, j| lambda[a.mul(reps[i], reps[j])]),
    ];
    let s = Structure::new(names, tables, lambda[a.bot()], lambda[a.top()])?;
    let lattice = FiniteBoundedLattice::from_structure(s)?;
    Ok(Reticulation {
        source: a.clone(),
        lattice,
        lambda,
        reps,
    })
}

fn pairs(n: usize) -> impl Iterator<Item = (Elem, Elem)> {
    (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)))
}

/// Checks conditions 1)–5) of a reticulation and the properties derived from
/// them, exhaustively, for an arbitrary pair `(L, λ)`.
pub fn check_reticulation_axioms(a: &FiniteResiduatedLattice, l: &FiniteBoundedLattice, lambda: &[Elem]) -> Report {
    let n = a.size();
    let lam = |x: Elem| lambda[x];
    let nm = |x: Elem| a.name(x).to_string();
    let mut r = Report::new("reticulation axioms");

    r.check(
        "1) λ(a*b) = λ(a) ^ λ(b)",
        pairs(n)
            .find(|&(x, y)| lam(a.mul(x, y)) != l.meet(lam(x), lam(y)))
            .map(|(x, y)| format!("a={}, b={}", nm(x), nm(y))),
    );
    r.check(
        "2) λ(a v b) = λ(a) v λ(b)",
        pairs(n)
            .find(|&(x, y)| lam(a.join(x, y)) != l.join(lam(x), lam(y)))
            .map(|(x, y)| format!("a={}, b={}", nm(x), nm(y))),
    );
    r.check(
        "3) λ(0) = 0, λ(1) = 1",
        (lam(a.bot()) != l.bot() || lam(a.top()) != l.top()).then(|| {
            format!("λ(0)={}, λ(1)={}", l.name(lam(a.bot())), l.name(lam(a.top())))
        }),
    );
    let mut hit = vec![false; l.size()];
    for &x in lambda {
        hit[x] = true;
    }
    r.check(
        "4) λ is surjective",
        hit.iter().position(|h| !h).map(|x| format!("{} has no preimage", l.name(x))),
    );
    // a^n is decreasing and constant from the stable index on, so n ranges
    // over 1..=k.
    let powers: Vec<Vec<Elem>> = (0..n)
        .map(|x| {
            let (_, k) = a.stable_power(x);
            (1..=k).map(|i| a.power(x, i)).collect()
        })
        .collect();
    r.check(
        "5) λ(a) <= λ(b) iff a^n <= b for some n",
        pairs(n)
            .find(|&(x, y)| l.leq(lam(x), lam(y)) != powers[x].iter().any(|&p| a.leq(p, y)))
            .map(|(x, y)| format!("a={}, b={}", nm(x), nm(y))),
    );
    r.check(
        "a) λ is order-preserving",
        pairs(n)
            .find(|&(x, y)| a.leq(x, y) && !l.leq(lam(x), lam(y)))
            .map(|(x, y)| format!("a={}, b={}", nm(x), nm(y))),
    );
    r.check(
        "b) λ(a ^ b) = λ(a) ^ λ(b)",
        pairs(n)
            .find(|&(x, y)| lam(a.meet(x, y)) != l.meet(lam(x), lam(y)))
            .map(|(x, y)| format!("a={}, b={}", nm(x), nm(y))),
    );
    r.check(
        "c) λ(a^n) = λ(a)",
        (0..n)
            .flat_map(|x| powers[x].iter().map(move |&p| (x, p)))
            .find(|&(x, p)| lam(p) != lam(x))
            .map(|(x, p)| format!("a={}, power {}", nm(x), nm(p))),
    );
    r.check(
        "λ(a) = 1 iff a = 1",
        (0..n)
            .find(|&x| (lam(x) == l.top()) != (x == a.top()))
            .map(|x| format!("a={}", nm(x))),
    );
    r.check(
        "λ(a) = 0 iff a^n = 0 for some n",
        (0..n)
            .find(|&x| (lam(x) == l.bot()) != powers[x].contains(&a.bot()))
            .map(|x| format!("a={}", nm(x))),
    );
    r.check(
        "λ(a) = λ(b) iff <a> = <b>",
        {
            let pf: Vec<Filter> = (0..n).map(|x| principal_filter(a, x)).collect();
            pairs(n)
                .find(|&(x, y)| (lam(x) == lam(y)) != (pf[x] == pf[y]))
                .map(|(x, y)| format!("a={}, b={}", nm(x), nm(y)))
        },
    );
    r.check(
        "λ(<a>) = <λ(a)>",
        (0..n)
            .find(|&x| {
                let img = filters::subset(l, principal_filter(a, x).members().map(lam));
                img != *principal_filter(l, lam(x)).as_set()
            })
            .map(|x| format!("a={}", nm(x))),
    );
    match all_filters(a) {
        Ok(fl) => {
            let images: Vec<FixedBitSet> = fl
                .filters()
                .iter()
                .map(|f| filters::subset(l, f.members().map(lam)))
                .collect();
            r.check(
                "λ(a) ∈ λ(F) iff a ∈ F",
                fl.filters()
                    .iter()
                    .zip(&images)
                    .find_map(|(f, img)| {
                        (0..n)
                            .find(|&x| img.contains(lam(x)) != f.contains(x))
                            .map(|x| format!("a={}, F={}", nm(x), a.format_set(f.members())))
                    }),
            );
            let k = images.len();
            r.check(
                "λ(F) = λ(G) iff F = G",
                pairs(k)
                    .find(|&(i, j)| (images[i] == images[j]) != (i == j))
                    .map(|(i, j)| {
                        format!(
                            "F={}, G={}",
                            a.format_set(fl.filter(i).members()),
                            a.format_set(fl.filter(j).members())
                        )
                    }),
            );
        }
        Err(e) => r.push("λ(a) ∈ λ(F) iff a ∈ F", false, e.to_string()),
    }
    r
}

/// `L(f)`: the lattice map `λ_A(a) ↦ λ_B(f(a))`, certified.
pub fn functor_on_morphism(f: &Morphism, ra: &Reticulation, rb: &Reticulation) -> Result<Morphism> {
    if f.source_size() != ra.source.size() {
        return Err(Error::Shape("morphism does not start at the first reticulation's source".into()));
    }
    let map: Vec<Elem> = (0..ra.lattice.size())
        .map(|x| rb.lambda_of(f.apply(ra.representative(x))))
        .collect();
    if let Some(a) = (0..ra.source.size()).find(|&a| map[ra.lambda_of(a)] != rb.lambda_of(f.apply(a))) {
        return Err(Error::Invariant(format!(
            "L(f) is not well defined at {}",
            ra.source.name(a)
        )));
    }
    let m = Morphism::new(Kind::BoundedLattice, map);
    check_morphism(&ra.lattice, &rb.lattice, &m)?;
    Ok(m)
}

/// Checks `L(id) = id` on the source of `f` and `L(g ∘ f) = L(g) ∘ L(f)`.
pub fn check_functoriality(
    f: &Morphism,
    g: &Morphism,
    ra: &Reticulation,
    rb: &Reticulation,
    rc: &Reticulation,
) -> Result<Report> {
    let mut r = Report::new("functoriality");
    let id = Morphism::identity(Kind::ResiduatedLattice, ra.source.size());
    let lid = functor_on_morphism(&id, ra, ra)?;
    r.check(
        "L(id) = id",
        (lid.map() != Morphism::identity(Kind::BoundedLattice, ra.lattice.size()).map())
            .then(|| format!("{:?}", lid.map())),
    );
    let lf = functor_on_morphism(f, ra, rb)?;
    let lg = functor_on_morphism(g, rb, rc)?;
    let lgf = functor_on_morphism(&f.then(g), ra, rc)?;
    r.check(
        "L(g∘f) = L(g)∘L(f)",
        (lgf.map() != lf.then(&lg).map()).then(|| format!("{:?} vs {:?}", lgf.map(), lf.then(&lg).map())),
    );
    Ok(r)
}

/// The isomorphism `f: L1 → L2` with `f ∘ λ1 = λ2`.
pub fn uniqueness_iso(r1: &Reticulation, r2: &Reticulation) -> Result<Morphism> {
    if r1.source.structure() != r2.source.structure() {
        return Err(Error::Shape("reticulations of different algebras".into()));
    }
    let mut map = vec![usize::MAX; r1.lattice.size()];
    for a in 0..r1.source.size() {
        let (x, y) = (r1.lambda_of(a), r2.lambda_of(a));
        if map[x] != usize::MAX && map[x] != y {
            return Err(Error::Invariant(format!(
                "f(λ1(a)) = λ2(a) is not well defined at {}",
                r1.source.name(a)
            )));
        }
        map[x] = y;
    }
    let f = Morphism::new(Kind::BoundedLattice, map);
    check_isomorphism(&r1.lattice, &r2.lattice, &f)?;
    Ok(f)
}

/// The bounded lattice isomorphism `F(A) → F(L(A))`, `F ↦ λ(F)`.
#[derive(Clone, Debug)]
pub struct FilterTransport {
    pub source: FilterLattice,
    pub target: FilterLattice,
    pub map: Morphism,
}

pub fn transport_filters(r: &Reticulation) -> Result<FilterTransport> {
    let source = all_filters(&r.source)?;
    let target = all_filters(&r.lattice)?;
    let map = source
        .filters()
        .iter()
        .map(|f| {
            let img = Filter::new(&r.lattice, r.image(f.members()))?;
            target.index_of(&img).ok_or_else(|| {
                Error::Invariant(format!("λ({}) is not a filter", r.source.format_set(f.members())))
            })
        })
        .collect::<Result<Vec<Elem>>>()?;
    let map = Morphism::new(Kind::BoundedLattice, map);
    check_isomorphism(source.lattice(), target.lattice(), &map)?;
    Ok(FilterTransport { source, target, map })
}

/// Both sides of the quotient square for a filter `F` of `A`.
#[derive(Clone, Debug)]
pub struct QuotientComparison {
    /// `A/F` and the projection `A → A/F`.
    pub quotient: FiniteResiduatedLattice,
    pub projection: Morphism,
    /// `L(A/F)`.
    pub retic_of_quotient: Reticulation,
    /// `L(A)/λ(F)` and the projection `L(A) → L(A)/λ(F)`.
    pub quotient_of_retic: FiniteBoundedLattice,
    pub lattice_projection: Morphism,
    /// `h: L(A)/λ(F) → L(A/F)`, `λ(a)/λ(F) ↦ λ1(a/F)`.
    pub surjection: Morphism,
    pub isomorphism: Option<Morphism>,
}

impl QuotientComparison {
    pub fn isomorphic(&self) -> bool {
        self.isomorphism.is_some()
    }
}

pub fn quotient_comparison(
    r: &Reticulation,
    f: &Filter,
    opts: &SearchOptions,
) -> Result<QuotientComparison> {
    let a = &r.source;
    let (quotient, projection) = filters::quotient_rl(a, f)?;
    let retic_of_quotient = reticulate(&quotient)?;
    let lf = Filter::new(&r.lattice, r.image(f.members()))?;
    let (quotient_of_retic, lattice_projection) = filters::quotient_lattice(&r.lattice, &lf)?;

    let mut map = vec![usize::MAX; quotient_of_retic.size()];
    for x in 0..a.size() {
        let class = lattice_projection.apply(r.lambda_of(x));
        let value = retic_of_quotient.lambda_of(projection.apply(x));
        if map[class] != usize::MAX && map[class] != value {
            return Err(Error::Invariant(format!("h is not well defined at {}", a.name(x))));
        }
        map[class] = value;
    }
    let surjection = Morphism::new(Kind::BoundedLattice, map);
    check_morphism(&quotient_of_retic, retic_of_quotient.lattice(), &surjection)?;
    if !surjection.is_surjective(retic_of_quotient.lattice().size()) {
        return Err(Error::Invariant("h is not surjective".into()));
    }
    let isomorphism = find_isomorphism(&quotient_of_retic, retic_of_quotient.lattice(), Kind::BoundedLattice, opts)?;
    Ok(QuotientComparison {
        quotient,
        projection,
        retic_of_quotient,
        quotient_of_retic,
        lattice_projection,
        surjection,
        isomorphism,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::subalgebra;
    use crate::fixtures;

    #[test]
    fn kowalski6_reticulation() {
        let r = reticulate(&fixtures::kowalski6()).unwrap();
        assert_eq!(r.lattice().names(), ["<0>", "<a>", "<b>", "<c>", "<1>"]);
        let n = |s: &str| r.lattice().element(s).unwrap();
        let mut edges: Vec<(Elem, Elem)> = r.lattice().covers();
        edges.sort();
        let mut want = vec![
            (n("<0>"), n("<b>")),
            (n("<0>"), n("<c>")),
            (n("<b>"), n("<a>")),
            (n("<c>"), n("<a>")),
            (n("<a>"), n("<1>")),
        ];
        want.sort();
        assert_eq!(edges, want);
        let k = r.source();
        assert_eq!(r.lambda_of(k.element("d").unwrap()), n("<c>"));
        assert!(r.check_axioms().passed(), "{}", r.check_axioms());
    }

    #[test]
    fn small_reticulations() {
        let r = reticulate(&fixtures::godel_chain(2)).unwrap();
        assert_eq!(r.lattice().size(), 2);
        let i5 = fixtures::iorgulescu5();
        let r = reticulate(&i5).unwrap();
        assert_eq!(r.lambda(), &[0, 1, 2, 3, 4]);
        let reduct = i5.lattice_reduct().unwrap();
        assert!(check_isomorphism(&reduct, r.lattice(), &Morphism::identity(Kind::BoundedLattice, 5)).is_ok());
    }

    #[test]
    fn axioms_hold_on_the_library() {
        for (name, a) in fixtures::library() {
            let r = reticulate(&a).unwrap();
            let rep = r.check_axioms();
            assert!(rep.passed(), "{name}: {rep}");
            assert_eq!(rep.clauses.len(), 15);
        }
    }

    #[test]
    fn axioms_reject_a_wrong_lambda() {
        // Collapsing everything below 1 onto 0 of a 2-chain loses the order.
        let k = fixtures::kowalski6();
        let two = fixtures::godel_chain(2).lattice_reduct().unwrap();
        let lambda: Vec<Elem> = k.elements().map(|x| usize::from(x == k.top())).collect();
        let rep = check_reticulation_axioms(&k, &two, &lambda);
        assert!(!rep.passed());
        assert!(Reticulation::from_parts(k, two, lambda).is_err());
    }

    #[test]
    fn functor_on_identity_and_projection() {
        let k = fixtures::kowalski6();
        let r = reticulate(&k).unwrap();
        let id = Morphism::identity(Kind::ResiduatedLattice, 6);
        assert_eq!(functor_on_morphism(&id, &r, &r).unwrap().map(), &[0, 1, 2, 3, 4]);

        let f = principal_filter(&k, k.element("a").unwrap());
        let (q, proj) = filters::quotient_rl(&k, &f).unwrap();
        let rq = reticulate(&q).unwrap();
        let lp = functor_on_morphism(&proj, &r, &rq).unwrap();
        assert!(lp.is_surjective(rq.lattice().size()));
        // oracle: λ1(π(a)) for every a
        for a in k.elements() {
            assert_eq!(lp.apply(r.lambda_of(a)), rq.lambda_of(proj.apply(a)));
        }
        let rep = check_functoriality(&id, &proj, &r, &r, &rq).unwrap();
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn functor_on_a_subalgebra_inclusion() {
        // {0,c,1} is closed in iorgulescu5 (c -> 0 = 0, c*c = c).
        let i5 = fixtures::iorgulescu5();
        let (b, inc) = subalgebra(&i5, &[0, 3, 4]).unwrap();
        let rb = reticulate(&b).unwrap();
        let ra = reticulate(&i5).unwrap();
        let li = functor_on_morphism(&inc, &rb, &ra).unwrap();
        assert_eq!(li.map(), &[0, 3, 4]);
        assert!(li.is_injective());
    }

    #[test]
    fn uniqueness_against_a_relabelled_copy() {
        let k = fixtures::kowalski6();
        let r = reticulate(&k).unwrap();
        assert_eq!(uniqueness_iso(&r, &r).unwrap().map(), &[0, 1, 2, 3, 4]);
        let perm = [3, 0, 4, 1, 2];
        let l2 = r.lattice().permuted(&perm).unwrap();
        let lambda2: Vec<Elem> = r.lambda().iter().map(|&x| perm[x]).collect();
        let r2 = Reticulation::from_parts(k, l2, lambda2).unwrap();
        let f = uniqueness_iso(&r, &r2).unwrap();
        assert_eq!(f.map(), &perm);
        for a in r.source().elements() {
            assert_eq!(f.apply(r.lambda_of(a)), r2.lambda_of(a));
        }
    }

    #[test]
    fn filter_transport() {
        let r = reticulate(&fixtures::kowalski6()).unwrap();
        let t = transport_filters(&r).unwrap();
        assert_eq!(t.source.len(), 5);
        assert_eq!(t.target.len(), 5);
        assert_eq!(t.map.apply(t.source.lattice().bot()), t.target.lattice().bot());
        assert_eq!(t.map.apply(t.source.lattice().top()), t.target.lattice().top());
        for (_, a) in fixtures::library() {
            let r = reticulate(&a).unwrap();
            let t = transport_filters(&r).unwrap();
            // restricted to principal filters it is λ(<a>) = <λ(a)>
            for x in a.elements() {
                let i = t.source.index_of(&principal_filter(&a, x)).unwrap();
                let j = t.target.index_of(&principal_filter(r.lattice(), r.lambda_of(x))).unwrap();
                assert_eq!(t.map.apply(i), j);
            }
        }
    }

    #[test]
    fn quotient_counterexample() {
        let k = fixtures::kowalski6();
        let r = reticulate(&k).unwrap();
        let f = principal_filter(&k, k.element("a").unwrap());
        let c = quotient_comparison(&r, &f, &SearchOptions::default()).unwrap();
        assert_eq!(c.quotient.size(), 4);
        assert_eq!(c.retic_of_quotient.lattice().size(), 4);
        // λ(F) = {<a>,<1>} only merges <a> with <1>: {<0>}, {<b>}, {<c>}, {<a>,<1>}.
        let l = r.lattice();
        let e = |s: &str| l.element(s).unwrap();
        let classes = |x: Elem| -> Vec<Elem> {
            l.elements()
                .filter(|&y| [e("<a>"), e("<1>")].iter().any(|&t| l.meet(x, t) == l.meet(y, t)))
                .collect()
        };
        assert_eq!(classes(e("<b>")), [e("<b>")]);
        assert_eq!(classes(e("<a>")), [e("<a>"), e("<1>")]);
        assert_eq!(c.quotient_of_retic.size(), 4);
        assert!(c.isomorphic());
        assert!(c.surjection.is_injective());
    }

    #[test]
    fn trivial_quotient_comparisons() {
        let k = fixtures::kowalski6();
        let r = reticulate(&k).unwrap();
        let c = quotient_comparison(&r, &principal_filter(&k, k.top()), &SearchOptions::default()).unwrap();
        assert!(c.isomorphic());
        assert_eq!(c.quotient_of_retic.size(), 5);
        let c = quotient_comparison(&r, &principal_filter(&k, k.bot()), &SearchOptions::default()).unwrap();
        assert!(c.isomorphic());
        assert_eq!(c.quotient_of_retic.size(), 1);
    }

    #[test]
    fn h_is_injective_exactly_when_isomorphic() {
        for (_, a) in fixtures::library() {
            let r = reticulate(&a).unwrap();
            for f in all_filters(&a).unwrap().filters() {
                let c = quotient_comparison(&r, f, &SearchOptions::default()).unwrap();
                assert_eq!(c.surjection.is_injective(), c.isomorphic());
            }
        }
    }
}
