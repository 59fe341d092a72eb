//! Every abelian group of a given order, up to isomorphism, as a product of
//! cyclic groups of prime-power order.

use sumgraph_core::GroupSpec;

fn factorize(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Partitions of `n` into non-increasing parts.
fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max.min(n)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// The isomorphism types of order `n`, primes ascending and, within a prime,
/// partitions in reverse lexicographic order (cyclic first).
pub fn abelian_groups_of_order(n: usize) -> Vec<GroupSpec> {
    assert!(n >= 1, "group order must be positive");
    let mut choices: Vec<Vec<usize>> = vec![Vec::new()];
    for (p, e) in factorize(n) {
        let mut next = Vec::new();
        for prefix in &choices {
            for part in partitions(e) {
                let mut f = prefix.clone();
                f.extend(part.iter().map(|&k| p.pow(k)));
                next.push(f);
            }
        }
        choices = next;
    }
    choices
        .into_iter()
        .map(|f| GroupSpec::new(&f).expect("prime powers are valid factors"))
        .collect()
}

pub fn abelian_groups_up_to(max_order: usize) -> Vec<GroupSpec> {
    (1..=max_order).flat_map(abelian_groups_of_order).collect()
}
