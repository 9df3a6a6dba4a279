//! Acceptance suite. Every criterion runs, prints one PASS/FAIL line, and the
//! test fails at the end if any criterion failed.

use reticulation::algebra::{boolean_center, FiniteAlgebra, FiniteBoundedLattice, FiniteResiduatedLattice, Kind};
use reticulation::constructions::{
    boolean_power, check_boolean_power_preservation, check_colimit_preservation, check_partition_colimit,
    check_product_preservation, check_subalgebra_preservation, closed_subsets, direct_power, direct_product,
    partition_system, InductiveSystem,
};
use reticulation::filters::{
    filters_by_generation, filters_by_subset_scan, generated_filter, principal_filter, quotient_rl, Filter,
};
use reticulation::fixtures;
use reticulation::morphism::{check_morphism, find_isomorphism, Morphism, SearchOptions};
use reticulation::reticulation::{quotient_comparison, reticulate, transport_filters};
use reticulation::stone::{
    co_ann_algebra, co_ann_by_subsets, co_annihilator, is_stone, is_strongly_stone, m_stone_conditions,
    negation_identity, transfer_checks,
};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn wide() -> SearchOptions {
    SearchOptions { max_size: 256 }
}

fn boolean(atoms: usize) -> FiniteBoundedLattice {
    FiniteBoundedLattice::boolean(atoms).unwrap()
}

fn product(a: &FiniteResiduatedLattice, b: &FiniteResiduatedLattice) -> FiniteResiduatedLattice {
    direct_product(&[a, b]).unwrap().0
}

/// Fixtures plus a handful of small constructed algebras.
fn corpus() -> Vec<(String, FiniteResiduatedLattice)> {
    let mut out = fixtures::library();
    let c2 = fixtures::godel_chain(2);
    let c3 = fixtures::godel_chain(3);
    out.push(("chain2 x iorgulescu5".into(), product(&c2, &fixtures::iorgulescu5())));
    out.push(("chain2 x chain3".into(), product(&c2, &c3)));
    out.push(("chain3 x kowalski6".into(), product(&c3, &fixtures::kowalski6())));
    out.push(("chain2^3".into(), direct_power(&c2, 3).unwrap().0));
    out.push(("chain3[B4]".into(), boolean_power(&c3, &boolean(2)).unwrap().algebra));
    out
}

/// Fifty constructed algebras: chains, binary products, direct powers and
/// Boolean powers.
fn generated() -> Vec<(String, FiniteResiduatedLattice)> {
    let mut out = Vec::new();
    for k in 2..=12 {
        out.push((format!("chain{k}"), fixtures::godel_chain(k)));
    }
    for i in 2..=5 {
        for j in i..=5 {
            out.push((format!("chain{i} x chain{j}"), product(&fixtures::godel_chain(i), &fixtures::godel_chain(j))));
        }
    }
    for (name, a) in [("kowalski6", fixtures::kowalski6()), ("iorgulescu5", fixtures::iorgulescu5())] {
        for k in 2..=4 {
            out.push((format!("chain{k} x {name}"), product(&fixtures::godel_chain(k), &a)));
        }
        out.push((format!("{name}^2"), direct_power(&a, 2).unwrap().0));
        out.push((format!("{name}[B2]"), boolean_power(&a, &boolean(1)).unwrap().algebra));
    }
    for k in 2..=7 {
        out.push((format!("chain{k}^2"), direct_power(&fixtures::godel_chain(k), 2).unwrap().0));
    }
    for e in 3..=5 {
        out.push((format!("chain2^{e}"), direct_power(&fixtures::godel_chain(2), e).unwrap().0));
    }
    out.push(("chain3^3".into(), direct_power(&fixtures::godel_chain(3), 3).unwrap().0));
    for k in 2..=6 {
        out.push((format!("chain{k}[B4]"), boolean_power(&fixtures::godel_chain(k), &boolean(2)).unwrap().algebra));
    }
    out.push(("chain2[B8]".into(), boolean_power(&fixtures::godel_chain(2), &boolean(3)).unwrap().algebra));
    out.push(("chain3[B8]".into(), boolean_power(&fixtures::godel_chain(3), &boolean(3)).unwrap().algebra));
    out.push(("iorgulescu12 x chain2".into(), product(&fixtures::iorgulescu12(), &fixtures::godel_chain(2))));
    out.push(("iorgulescu5 x kowalski6".into(), product(&fixtures::iorgulescu5(), &fixtures::kowalski6())));
    out
}

// Oracles computed straight from the join table.

fn naive_co_annihilator<A: FiniteAlgebra>(a: &A, x: usize) -> Vec<usize> {
    a.elements().filter(|&y| a.join(x, y) == a.top()).collect()
}

fn naive_boolean_center<A: FiniteAlgebra>(a: &A) -> Vec<usize> {
    a.elements()
        .filter(|&x| a.elements().any(|y| a.join(x, y) == a.top() && a.meet(x, y) == a.bot()))
        .collect()
}

fn names<A: FiniteAlgebra>(a: &A, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| a.name(x).to_string()).collect()
}

fn quotient_counterexample() -> Outcome {
    let k = fixtures::kowalski6();
    let r = reticulate(&k).map_err(|e| e.to_string())?;
    let l = r.lattice();
    ensure(l.size() == 5, || format!("|L(A)| = {}", l.size()))?;
    ensure(l.names() == ["<0>", "<a>", "<b>", "<c>", "<1>"], || format!("L(A) = {:?}", l.names()))?;
    let f = principal_filter(&k, k.element("a").unwrap());
    ensure(names(&k, &f.to_vec()) == ["a", "1"], || format!("F = {:?}", names(&k, &f.to_vec())))?;
    let c = quotient_comparison(&r, &f, &SearchOptions::default()).map_err(|e| e.to_string())?;
    let (lq, la_f) = (c.retic_of_quotient.lattice(), &c.quotient_of_retic);
    let cert = check_morphism(la_f, lq, &c.surjection);
    let iso = find_isomorphism(lq, la_f, Kind::BoundedLattice, &SearchOptions::default()).map_err(|e| e.to_string())?;
    let mut problems = Vec::new();
    if la_f.size() != 3 {
        problems.push(format!("|L(A)/λ(F)| = {} (expected 3)", la_f.size()));
    }
    if lq.size() != 4 {
        problems.push(format!("|L(A/F)| = {} (expected 4)", lq.size()));
    }
    if iso.is_some() {
        problems.push("L(A/F) ≅ L(A)/λ(F) (expected no isomorphism)".into());
    }
    if let Err(e) = cert {
        problems.push(format!("h is not a morphism: {e}"));
    } else if !c.surjection.is_surjective(lq.size()) {
        problems.push("h is not surjective".into());
    }
    ensure(problems.is_empty(), || problems.join("; "))
}

fn stone_fixtures() -> Outcome {
    let a = fixtures::iorgulescu5();
    let e = |s: &str| a.element(s).unwrap();
    ensure(names(&a, &naive_boolean_center(&a)) == ["0", "1"], || "iorgulescu5: oracle B(A)".into())?;
    ensure(boolean_center(&a).elements() == naive_boolean_center(&a), || "iorgulescu5: B(A)".into())?;
    for x in a.elements() {
        let got = co_annihilator(&a, [x]).to_vec();
        ensure(got == naive_co_annihilator(&a, x), || format!("iorgulescu5: {}^⊤", a.name(x)))?;
        let want = if x == a.top() { a.elements().collect() } else { vec![a.top()] };
        ensure(got == want, || format!("iorgulescu5: {}^⊤ = {:?}", a.name(x), names(&a, &got)))?;
    }
    ensure(is_stone(&a).holds(), || "iorgulescu5 is not Stone".into())?;
    ensure(is_strongly_stone(&a).unwrap().holds(), || "iorgulescu5 is not strongly Stone".into())?;
    let v = negation_identity(&a).counterexample;
    ensure(v == Some((e("a"), e("c"))), || format!("iorgulescu5: negation identity witness {v:?}"))?;
    // ~a v ~~a computed from the imp table
    let neg = |x| a.imp(x, a.bot());
    ensure(a.join(neg(e("a")), neg(neg(e("a")))) == e("c"), || "iorgulescu5: oracle ~a v ~~a".into())?;

    let b = fixtures::iorgulescu12();
    ensure(names(&b, &naive_boolean_center(&b)) == ["0", "1"], || "iorgulescu12: oracle B(A)".into())?;
    ensure(boolean_center(&b).elements() == naive_boolean_center(&b), || "iorgulescu12: B(A)".into())?;
    let neg = |x| b.imp(x, b.bot());
    ensure(b.elements().all(|x| b.join(neg(x), neg(neg(x))) == b.top()), || "iorgulescu12: oracle".into())?;
    ensure(negation_identity(&b).holds(), || "iorgulescu12: negation identity fails".into())?;
    let c = b.element("c").unwrap();
    let ct = co_annihilator(&b, [c]).to_vec();
    ensure(names(&b, &ct) == ["d", "1"], || format!("iorgulescu12: c^⊤ = {:?}", names(&b, &ct)))?;
    ensure(ct == naive_co_annihilator(&b, c), || "iorgulescu12: c^⊤ disagrees with oracle".into())?;
    ensure(!is_stone(&b).holds(), || "iorgulescu12 is Stone".into())
}

fn reticulation_axioms() -> Outcome {
    let mut algebras = fixtures::library();
    let gen = generated();
    ensure(gen.len() == 50, || format!("{} generated algebras", gen.len()))?;
    algebras.extend(gen);
    for (name, a) in algebras {
        let r = reticulate(&a).map_err(|e| format!("{name}: {e}"))?;
        let rep = r.check_axioms();
        if let Some(why) = first_failure(&rep) {
            return Err(format!("{name}: {why}"));
        }
    }
    Ok(())
}

fn transfer_suite() -> Outcome {
    for (name, a) in corpus() {
        let r = reticulate(&a).map_err(|e| format!("{name}: {e}"))?;
        let rep = transfer_checks(&r, &wide()).map_err(|e| format!("{name}: {e}"))?;
        ensure(rep.clauses.len() == 6, || format!("{name}: {} clauses", rep.clauses.len()))?;
        if let Some(why) = first_failure(&rep) {
            return Err(format!("{name}: {why}"));
        }
    }
    Ok(())
}

fn m_stone_equivalence() -> Outcome {
    for (name, a) in corpus().into_iter().filter(|(_, a)| a.size() <= 16) {
        let m = m_stone_conditions(&a, &wide()).map_err(|e| format!("{name}: {e}"))?;
        ensure(m.agreement(), || format!("{name}: {:?}", m.values()))?;
    }
    let m = m_stone_conditions(&fixtures::iorgulescu5(), &wide()).map_err(|e| e.to_string())?;
    ensure(m.values().iter().all(|&x| x), || format!("iorgulescu5: {:?}", m.values()))?;
    let m = m_stone_conditions(&fixtures::iorgulescu12(), &wide()).map_err(|e| e.to_string())?;
    ensure(m.values().iter().all(|&x| !x), || format!("iorgulescu12: {:?}", m.values()))
}

fn passed(name: &str, rep: reticulation::Result<reticulation::Report>) -> Outcome {
    let rep = rep.map_err(|e| format!("{name}: {e}"))?;
    match first_failure(&rep) {
        Some(why) => Err(format!("{name}: {why}")),
        None => Ok(()),
    }
}

fn first_failure(rep: &reticulation::Report) -> Option<String> {
    let c = rep.failures().next()?;
    Some(format!("{} ({})", c.name, c.detail))
}

fn projection_system(a: &FiniteResiduatedLattice, f: &Filter) -> InductiveSystem<FiniteResiduatedLattice> {
    let (q, p) = quotient_rl(a, f).unwrap();
    let id = |n| Morphism::identity(Kind::ResiduatedLattice, n);
    InductiveSystem::new(vec![a.clone(), q.clone(), q.clone()], vec![(0, 1, p), (1, 2, id(q.size()))]).unwrap()
}

fn preservation_suite() -> Outcome {
    let (k, i5) = (fixtures::kowalski6(), fixtures::iorgulescu5());
    passed("product", check_product_preservation(&[&k, &i5], &wide()))?;
    for (name, a) in fixtures::library().into_iter().filter(|(_, a)| a.size() <= 6) {
        let subsets = closed_subsets(&a).map_err(|e| e.to_string())?;
        ensure(!subsets.is_empty(), || format!("{name}: no closed subsets"))?;
        for s in subsets {
            passed(&format!("{name} subalgebra {s:?}"), check_subalgebra_preservation(&a, &s))?;
        }
    }
    for (name, a) in [("kowalski6", &k), ("iorgulescu5", &i5)] {
        let constant = InductiveSystem::constant(a, 3).map_err(|e| e.to_string())?;
        passed(&format!("{name} constant system"), check_colimit_preservation(&constant))?;
        for x in a.elements() {
            let sys = projection_system(a, &principal_filter(a, x));
            passed(&format!("{name} projection by <{}>", a.name(x)), check_colimit_preservation(&sys))?;
        }
        for atoms in 1..=2 {
            let p = partition_system(a, &boolean(atoms)).map_err(|e| e.to_string())?;
            passed(&format!("{name} partition system, {atoms} atoms"), check_colimit_preservation(&p.system))?;
        }
    }
    for (name, a) in fixtures::library() {
        for atoms in 1..=2 {
            passed(
                &format!("{name} Boolean power, {atoms} atoms"),
                check_boolean_power_preservation(&a, &boolean(atoms), &wide()),
            )?;
        }
    }
    Ok(())
}

fn partition_colimit_instance() -> Outcome {
    for (name, a) in [("chain2", fixtures::godel_chain(2)), ("iorgulescu5", fixtures::iorgulescu5())] {
        for atoms in 1..=3 {
            let b = boolean(atoms);
            passed(&format!("{name}, |B| = {}", b.size()), check_partition_colimit(&a, &b, &wide()))?;
            // |A[B]| = |A|^atoms: one value of A per atom.
            let p = boolean_power(&a, &b).map_err(|e| e.to_string())?;
            let want = a.size().pow(atoms as u32);
            ensure(p.algebra.size() == want, || format!("{name}: |A[B]| = {}", p.algebra.size()))?;
        }
    }
    Ok(())
}

fn filter_lattice_isomorphism() -> Outcome {
    for (name, a) in corpus() {
        let r = reticulate(&a).map_err(|e| format!("{name}: {e}"))?;
        transport_filters(&r).map_err(|e| format!("{name}: {e}"))?;
    }
    let k = fixtures::kowalski6();
    let r = reticulate(&k).map_err(|e| e.to_string())?;
    let t = transport_filters(&r).map_err(|e| e.to_string())?;
    // counted by the subset scan, independently of the transport
    let (fa, fl) = (
        filters_by_subset_scan(&k).map_err(|e| e.to_string())?.len(),
        filters_by_subset_scan(r.lattice()).map_err(|e| e.to_string())?.len(),
    );
    ensure(fa == 5 && fl == 5, || format!("kowalski6: {fa} and {fl} filters"))?;
    ensure(t.source.len() == 5 && t.target.len() == 5, || "kowalski6: transport sizes".into())
}

fn sorted(mut v: Vec<Filter>) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = v.drain(..).map(|f| f.to_vec()).collect();
    out.sort();
    out
}

fn oracle_equivalences() -> Outcome {
    for (name, a) in corpus() {
        for x in a.elements() {
            ensure(principal_filter(&a, x) == generated_filter(&a, [x]), || format!("{name}: <{}>", a.name(x)))?;
        }
        if a.size() <= 12 {
            let scan = sorted(filters_by_subset_scan(&a).map_err(|e| e.to_string())?);
            ensure(scan == sorted(filters_by_generation(&a)), || format!("{name}: filter enumerations differ"))?;
            let closure = sorted(co_ann_algebra(&a).map_err(|e| e.to_string())?.members().to_vec());
            let subsets = sorted(co_ann_by_subsets(&a).map_err(|e| e.to_string())?);
            ensure(closure == subsets, || format!("{name}: Co-Ann enumerations differ"))?;
        }
    }
    Ok(())
}

fn chains() -> Outcome {
    for k in 2..=8 {
        let c = fixtures::godel_chain(k);
        ensure(is_strongly_stone(&c).unwrap().holds(), || format!("chain{k} is not strongly Stone"))?;
        for x in c.elements() {
            let got = co_annihilator(&c, [x]).to_vec();
            ensure(got == naive_co_annihilator(&c, x), || format!("chain{k}: oracle at {x}"))?;
            let want = if x == c.top() { k } else { 1 };
            ensure(got.len() == want, || format!("chain{k}: {}^⊤ has {} elements", c.name(x), got.len()))?;
        }
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        ("quotient counterexample on kowalski6", quotient_counterexample),
        ("Stone fixtures", stone_fixtures),
        ("reticulation axioms on fixtures and 50 generated algebras", reticulation_axioms),
        ("transfer suite", transfer_suite),
        ("m-Stone equivalence", m_stone_equivalence),
        ("preservation suite", preservation_suite),
        ("partition colimit is the Boolean power", partition_colimit_instance),
        ("filter-lattice isomorphism", filter_lattice_isomorphism),
        ("oracle equivalences", oracle_equivalences),
        ("Goedel chains", chains),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(()) => println!("[PASS] {}. {name}", i + 1),
            Err(why) => {
                println!("[FAIL] {}. {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
