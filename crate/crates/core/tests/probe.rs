use dqg_core::coalg::comult;
use dqg_core::hopf::*;
use dqg_core::nfcore::*;
use std::time::Instant;

#[test]
#[ignore]
fn probe_terms() {
    let sess = Session::new(3);
    let d = element_det(&sess);
    let ct = comult(&sess, &d);
    eprintln!("{} tensor terms", ct.terms.len());
    for (k, (m, _c)) in ct.terms.iter().enumerate() {
        let (m1, m2) = (&m[0], &m[1]);
        let t0 = Instant::now();
        let sm2 = antipode(&sess, &{
            let mut e = Element::zero(3);
            e.insert_add(m2.clone(), dqg_core::CoeffFn::one(3, 2));
            e
        });
        let t_s = t0.elapsed();
        let mut e1 = Element::zero(3);
        e1.insert_add(m1.clone(), dqg_core::CoeffFn::one(3, 2));
        let t0 = Instant::now();
        let prod = mul(&sess, &e1, &sm2);
        eprintln!(
            "term {k}: S in {:?} ({} terms), mul in {:?} ({} terms)",
            t_s,
            sm2.terms.len(),
            t0.elapsed(),
            prod.terms.len()
        );
        if k >= 7 {
            break;
        }
    }
}
