//! Optimized predicates against the quantifier translations on groups above
//! the order-24 range covered by the acceptance suite.

use omega_norm::catalog::parse_builtin;
use omega_norm::embedding::{self, naive, ConjugatorScan};
use omega_norm::{GroupContext, Property};

fn compare(desc: &str) -> [usize; 7] {
    let g = parse_builtin(desc, 1000).unwrap();
    let ctx = GroupContext::new(&g);
    let mut counts = [0; 7];
    for h in ctx.lattice().unwrap().iter() {
        for prop in Property::ALL {
            let fast = embedding::holds(&ctx, prop, h).unwrap();
            let slow = naive::holds(&g, prop, h, ctx.lattice_cap()).unwrap();
            assert_eq!(
                fast,
                slow,
                "{desc}: {prop} on subgroup of order {}",
                h.order()
            );
            counts[prop.index()] += fast as usize;
        }
        assert_eq!(
            embedding::is_pronormal_with(&ctx, h, ConjugatorScan::Full),
            embedding::is_pronormal(&ctx, h)
        );
    }
    counts
}

#[test]
fn s3_x_s3() {
    let counts = compare("symmetric:3*symmetric:3");
    // weakly normal but not pronormal subgroups exist here
    assert!(counts[Property::WeaklyNormal.index()] > counts[Property::Pronormal.index()]);
}

#[test]
fn a5() {
    let counts = compare("alternating:5");
    // A5 itself, five A4, six D10, ten S3
    assert_eq!(counts[Property::SelfNormalizing.index()], 1 + 5 + 6 + 10);
}
