//! Stock semigroups used by tests, the verification suite, and the CLI's
//! `Zn`/`RZn`/`LZn` shorthands.

use crate::construct::{self, Brandt};
use crate::semigroup::FiniteSemigroup;

/// Cyclic group of order `n` under addition mod `n`.
pub fn cyclic(n: usize) -> FiniteSemigroup {
    let mul = (0..n).map(|x| (0..n).map(|y| (x + y) % n).collect()).collect();
    FiniteSemigroup::validate(n, mul, None, None).expect("cyclic group table")
}

/// Right zero semigroup: `xy = y`.
pub fn right_zero(n: usize) -> FiniteSemigroup {
    let mul = (0..n).map(|_| (0..n).collect()).collect();
    FiniteSemigroup::validate(n, mul, None, None).expect("right zero table")
}

/// Left zero semigroup: `xy = x`.
pub fn left_zero(n: usize) -> FiniteSemigroup {
    let mul = (0..n).map(|x| vec![x; n]).collect();
    FiniteSemigroup::validate(n, mul, None, None).expect("left zero table")
}

/// Null semigroup: `xy = 0` for all `x, y`.
pub fn null_semigroup(n: usize) -> FiniteSemigroup {
    let mul = (0..n).map(|_| vec![0; n]).collect();
    FiniteSemigroup::validate(n, mul, None, None).expect("null table")
}

/// Chain semilattice on `n` elements: `xy = min(x, y)`.
///
/// For `n = 2` this is the two-element monoid `{0, 1}` under multiplication.
pub fn chain_semilattice(n: usize) -> FiniteSemigroup {
    let mul = (0..n).map(|x| (0..n).map(|y| x.min(y)).collect()).collect();
    FiniteSemigroup::validate(n, mul, None, None).expect("chain semilattice table")
}

/// Klein four-group, element order `e, a, b, ab`.
pub fn klein_four() -> FiniteSemigroup {
    let mul = vec![
        vec![0, 1, 2, 3],
        vec![1, 0, 3, 2],
        vec![2, 3, 0, 1],
        vec![3, 2, 1, 0],
    ];
    FiniteSemigroup::validate(4, mul, None, None).expect("klein table")
}

/// Symmetric group on three points.
///
/// Elements are the permutations of `{0,1,2}` in the fixed order
/// `id, (01), (02), (12), (012), (021)`; the product applies the left
/// factor first.
pub fn symmetric_3() -> FiniteSemigroup {
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [1, 0, 2],
        [2, 1, 0],
        [0, 2, 1],
        [1, 2, 0],
        [2, 0, 1],
    ];
    let index_of = |p: &[usize; 3]| perms.iter().position(|q| q == p).unwrap();
    let mul = (0..6)
        .map(|x| {
            (0..6)
                .map(|y| {
                    let composed = [
                        perms[y][perms[x][0]],
                        perms[y][perms[x][1]],
                        perms[y][perms[x][2]],
                    ];
                    index_of(&composed)
                })
                .collect()
        })
        .collect();
    let labels = ["id", "(01)", "(02)", "(12)", "(012)", "(021)"]
        .map(String::from)
        .to_vec();
    FiniteSemigroup::validate_labeled(6, mul, Some(labels), None, None).expect("s3 table")
}

/// Brandt semigroup `B(G, {1..k})`.
pub fn brandt(group: &FiniteSemigroup, k: usize) -> Brandt {
    construct::brandt(group, k).expect("brandt over a validated group")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::ElementId;

    #[test]
    fn gallery_tables_validate() {
        assert_eq!(cyclic(6).identity(), Some(ElementId(0)));
        assert_eq!(right_zero(3).identity(), None);
        assert_eq!(left_zero(3).zero(), None);
        assert_eq!(null_semigroup(4).zero(), Some(ElementId(0)));
        assert_eq!(chain_semilattice(2).identity(), Some(ElementId(1)));
        assert_eq!(chain_semilattice(3).zero(), Some(ElementId(0)));
        assert_eq!(klein_four().order(), 4);
        assert_eq!(symmetric_3().identity(), Some(ElementId(0)));
    }

    #[test]
    fn symmetric_3_is_nonabelian() {
        let s = symmetric_3();
        let a = ElementId(1);
        let b = ElementId(2);
        assert_ne!(s.mul(a, b), s.mul(b, a));
    }
}
