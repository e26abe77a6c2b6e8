use super::{Diagram, DiagramError};
use crate::scalar::{dotted_loop_value, quantum, quantum_b, LaurentPoly, Scalar};

/// One side of a node in the stacked picture: the node at the other end of
/// the arc and whether that arc carries a dot.
type Link = Option<(usize, bool)>;

/// Stacks `top` over `bottom` and reduces.
///
/// Closed loops contribute `-[2]`; a component with `k >= 1` dots keeps a
/// single dot and contributes `(-[1]_s)^{k-1}`; a dotted loop then
/// contributes `q s^{-1} + q^{-1} s` and disappears.
pub fn compose(top: &Diagram, bottom: &Diagram) -> Result<(Scalar, Diagram), DiagramError> {
    let (factor, d) = compose_raw(top, bottom)?;
    Ok((Scalar::from_poly(factor), d))
}

/// Node layout: `0..n` are the bottom points of `bottom`, `n..2n` the glued
/// middle row, `2n..3n` the top points of `top`. Node `2n - k` is both the
/// top point `t_k` of `bottom` and the bottom point `b_k` of `top`.
pub(crate) fn compose_raw(top: &Diagram, bottom: &Diagram) -> Result<(LaurentPoly, Diagram), DiagramError> {
    if top.n != bottom.n {
        return Err(DiagramError::SizeMismatch(top.n, bottom.n));
    }
    let n = top.n;
    let m = 2 * n;
    let top_node = |p: u32| {
        let p = p as usize;
        if p <= n {
            m - p
        } else {
            m + p - n - 1
        }
    };
    let mut lower: Vec<Link> = vec![None; 3 * n];
    let mut upper: Vec<Link> = vec![None; 3 * n];
    for &(a, b) in &bottom.arcs {
        let dot = bottom.is_dotted((a, b));
        let (x, y) = (a as usize - 1, b as usize - 1);
        lower[x] = Some((y, dot));
        lower[y] = Some((x, dot));
    }
    for &(a, b) in &top.arcs {
        let dot = top.is_dotted((a, b));
        let (x, y) = (top_node(a), top_node(b));
        upper[x] = Some((y, dot));
        upper[y] = Some((x, dot));
    }
    let label = |id: usize| if id < n { id as u32 + 1 } else { (id - n + 1) as u32 };

    let mut visited = vec![false; 3 * n];
    let mut arcs = Vec::with_capacity(n);
    let mut dots = Vec::new();
    let mut extra_dots = 0u32;
    let mut plain_loops = 0u32;
    let mut dotted_loops = 0u32;

    // open components start and end on the outer rows
    for start in (0..n).chain(m..3 * n) {
        if visited[start] {
            continue;
        }
        let mut cur = start;
        let mut use_lower = start < n;
        let mut count = 0u32;
        visited[cur] = true;
        loop {
            let link = if use_lower { lower[cur] } else { upper[cur] };
            let (next, dot) = link.expect("every node has an arc on each glued side");
            count += u32::from(dot);
            cur = next;
            visited[cur] = true;
            if cur < n || cur >= m {
                break;
            }
            use_lower = !use_lower;
        }
        let (a, b) = (label(start).min(label(cur)), label(start).max(label(cur)));
        arcs.push((a, b));
        if count > 0 {
            dots.push((a, b));
            extra_dots += count - 1;
        }
    }

    // what is left in the middle row closes into loops
    for start in n..m {
        if visited[start] {
            continue;
        }
        let mut cur = start;
        let mut use_lower = true;
        let mut count = 0u32;
        loop {
            visited[cur] = true;
            let link = if use_lower { lower[cur] } else { upper[cur] };
            let (next, dot) = link.expect("middle nodes have two arcs");
            count += u32::from(dot);
            cur = next;
            use_lower = !use_lower;
            if cur == start {
                break;
            }
        }
        if count == 0 {
            plain_loops += 1;
        } else {
            dotted_loops += 1;
            extra_dots += count - 1;
        }
    }

    let mut factor = LaurentPoly::one();
    if plain_loops > 0 {
        factor = &factor * &(-quantum(2)).pow(plain_loops);
    }
    if extra_dots > 0 {
        factor = &factor * &(-quantum_b(1)).pow(extra_dots);
    }
    if dotted_loops > 0 {
        factor = &factor * &dotted_loop_value().pow(dotted_loops);
    }
    let d = Diagram::new(n, arcs, dots)?;
    Ok((factor, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Flavor;
    use crate::scalar::Scalar;

    fn e(flavor: Flavor, n: usize, i: usize) -> Diagram {
        Diagram::generator(flavor, n, i).unwrap()
    }

    fn minus(p: LaurentPoly) -> Scalar {
        Scalar::from_poly(-p)
    }

    #[test]
    fn loop_removal() {
        let e1 = e(Flavor::A, 2, 1);
        assert_eq!(compose(&e1, &e1).unwrap(), (minus(quantum(2)), e1));
    }

    #[test]
    fn dot_merging() {
        let e0 = e(Flavor::B, 2, 0);
        assert_eq!(compose(&e0, &e0).unwrap(), (minus(quantum_b(1)), e0));
    }

    #[test]
    fn dotted_loop() {
        let e0 = e(Flavor::B, 2, 0);
        let e1 = e(Flavor::B, 2, 1);
        let (f1, d01) = compose(&e0, &e1).unwrap();
        assert!(f1.is_one());
        assert_eq!(d01.dots(), &[(3, 4)]);
        let (f2, d) = compose(&e1, &d01).unwrap();
        assert_eq!(f2, Scalar::from_poly(dotted_loop_value()));
        assert_eq!(d, e1);
    }

    #[test]
    fn unit_law() {
        for d in Diagram::all(Flavor::B, 3) {
            let id = Diagram::identity(3);
            assert_eq!(compose(&id, &d).unwrap(), (Scalar::one(), d.clone()));
            assert_eq!(compose(&d, &id).unwrap(), (Scalar::one(), d.clone()));
        }
    }

    #[test]
    fn figure_one_times_e3_e5() {
        let fig = Diagram::new(6, vec![(1, 12), (2, 5), (3, 4), (6, 9), (7, 8), (10, 11)], vec![]).unwrap();
        let (f35, e35) = compose(&e(Flavor::A, 6, 3), &e(Flavor::A, 6, 5)).unwrap();
        assert!(f35.is_one());
        let (f, d) = compose(&fig, &e35).unwrap();
        assert_eq!(f, minus(quantum(2)));
        // strand 1 vertical; top cups (1,2),(4,5); top 3 -> bottom 2;
        // bottom caps (3,4),(5,6)
        let expected = Diagram::new(6, vec![(1, 12), (2, 9), (3, 4), (5, 6), (7, 8), (10, 11)], vec![]).unwrap();
        assert_eq!(d, expected);
    }

    #[test]
    fn size_mismatch() {
        assert_eq!(
            compose(&Diagram::identity(2), &Diagram::identity(3)),
            Err(DiagramError::SizeMismatch(2, 3))
        );
    }
}
