use super::table::{CayleyTable, MAX_FINITE_ORDER};
use super::{Elem, GroupError};

pub(super) fn cyclic(n: usize) -> Result<CayleyTable, GroupError> {
    if n == 0 {
        return Err(GroupError::InvalidParameter("cyclic group needs n >= 1".into()));
    }
    let labels = (0..n).map(power_label("a")).collect();
    CayleyTable::from_fn(n, |a, b| (a + b) % n, labels)
}

/// `r^k s^f` has id `k + n f`, with `s r s = r^-1`.
pub(super) fn dihedral(n: usize) -> Result<CayleyTable, GroupError> {
    if n == 0 {
        return Err(GroupError::InvalidParameter("dihedral group needs n >= 1".into()));
    }
    let labels = (0..2 * n)
        .map(|id| {
            let (k, f) = (id % n, id / n);
            match (k, f) {
                (0, 0) => "e".to_string(),
                (_, 0) => power_label("r")(k),
                (0, _) => "s".to_string(),
                _ => format!("{}s", power_label("r")(k)),
            }
        })
        .collect();
    CayleyTable::from_fn(
        2 * n,
        |a, b| {
            let (k1, f1) = (a % n, a / n);
            let (k2, f2) = (b % n, b / n);
            let k = if f1 == 0 { (k1 + k2) % n } else { (k1 + n - k2) % n };
            k + n * ((f1 + f2) % 2)
        },
        labels,
    )
}

/// Permutations of `0..n` in lexicographic order, composed as `(ab)(x) = a(b(x))`.
pub(super) fn symmetric(n: usize) -> Result<CayleyTable, GroupError> {
    if n == 0 {
        return Err(GroupError::InvalidParameter("symmetric group needs n >= 1".into()));
    }
    let order: usize = (1..=n).product();
    if order > MAX_FINITE_ORDER {
        return Err(GroupError::TooLarge { order, limit: MAX_FINITE_ORDER });
    }
    let perms = permutations(n);
    let index: std::collections::HashMap<&[usize], usize> =
        perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let labels = perms.iter().map(|p| cycle_label(p)).collect();
    CayleyTable::from_fn(
        order,
        |a, b| {
            let composed: Vec<usize> = perms[b].iter().map(|&x| perms[a][x]).collect();
            index[composed.as_slice()]
        },
        labels,
    )
}

/// Ids `0..8` are `1, -1, i, -i, j, -j, k, -k`.
pub(super) fn quaternion8() -> Result<CayleyTable, GroupError> {
    // unit products among {1, i, j, k} as (sign, unit)
    const UNIT: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].map(String::from).to_vec();
    CayleyTable::from_fn(
        8,
        |a, b| {
            let (sa, ua) = (a % 2 == 1, a / 2);
            let (sb, ub) = (b % 2 == 1, b / 2);
            let (s, u) = UNIT[ua][ub];
            2 * u + usize::from(s ^ sa ^ sb)
        },
        labels,
    )
}

/// Direct product with id `a + |x| b`.
pub(super) fn finite_product(x: &CayleyTable, y: &CayleyTable) -> Result<CayleyTable, GroupError> {
    let (qa, qb) = (x.order(), y.order());
    let order = qa * qb;
    if order > MAX_FINITE_ORDER {
        return Err(GroupError::TooLarge { order, limit: MAX_FINITE_ORDER });
    }
    let labels = (0..order).map(|c| format!("({}, {})", x.label(Elem(c % qa)), y.label(Elem(c / qa)))).collect();
    CayleyTable::from_fn(
        order,
        |a, b| {
            let l = x.multiply(Elem(a % qa), Elem(b % qa)).0;
            let r = y.multiply(Elem(a / qa), Elem(b / qa)).0;
            l + qa * r
        },
        labels,
    )
}

fn power_label(base: &'static str) -> impl Fn(usize) -> String {
    move |k| match k {
        0 => "e".to_string(),
        1 => base.to_string(),
        _ => format!("{base}^{k}"),
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(current.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
}

fn cycle_label(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = vec![start + 1];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cycle.push(x + 1);
            x = p[x];
        }
        let body: Vec<String> = cycle.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!("({})", body.join(" ")));
    }
    if out.is_empty() {
        "e".to_string()
    } else {
        out
    }
}
