#![allow(dead_code)]

use compactum::{make_group, Group, GroupSpec};

/// The finite groups certified by the acceptance run.
pub fn finite_catalog() -> Vec<(&'static str, GroupSpec)> {
    let z = |n| GroupSpec::Cyclic { n };
    vec![
        ("trivial", z(1)),
        ("Z/2", z(2)),
        ("Z/3", z(3)),
        ("Z/4", z(4)),
        ("Z/2xZ/2", GroupSpec::Product { factors: vec![z(2), z(2)] }),
        ("Z/6", z(6)),
        ("S3", GroupSpec::Symmetric { n: 3 }),
        ("D4", GroupSpec::Dihedral { n: 4 }),
        ("Q8", GroupSpec::Quaternion8),
    ]
}

/// Finite catalog plus infinite groups.
pub fn full_catalog() -> Vec<(&'static str, GroupSpec)> {
    let mut all = finite_catalog();
    all.push(("Z", GroupSpec::Integers));
    all.push(("ZxZ/2", GroupSpec::Product { factors: vec![GroupSpec::Integers, GroupSpec::Cyclic { n: 2 }] }));
    all
}

pub fn group(spec: &GroupSpec) -> Group {
    make_group(spec).expect("catalog group")
}
