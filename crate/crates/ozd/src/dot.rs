//! DOT rendering of the zero-divisor graph of a constant map: vertices are
//! the two-sided zero-divisors of `π_k`, with an undirected edge `α — β`
//! whenever `α∘β = π_k` or `β∘α = π_k`. Self-loops mark elements squaring
//! to `π_k`.

use std::fmt::Write;

use crate::chain::{Point, Transformation};
use crate::error::Result;
use crate::sets::{enumerate_with_cap, SemigroupId, DEFAULT_ENUMERATION_CAP};

/// Renders the zero-divisor graph of `π_k` on the chain of size `n` as DOT.
/// Output is deterministic: vertices in enumeration order, edges in index
/// order, the constant map drawn with a double outline.
pub fn zero_divisor_graph(n: usize, k: Point) -> Result<String> {
    zero_divisor_graph_with_cap(n, k, DEFAULT_ENUMERATION_CAP)
}

pub fn zero_divisor_graph_with_cap(n: usize, k: Point, cap: usize) -> Result<String> {
    let store = enumerate_with_cap(&SemigroupId::Z { n, k }, cap)?;
    let pi = Transformation::constant(n, k)?;
    let mut out = String::new();
    let _ = writeln!(out, "graph zero_divisors {{");
    let _ = writeln!(out, "  // two-sided zero-divisors of pi_{k} on the chain of size {n}");
    let _ = writeln!(out, "  // edge a -- b when a*b = pi_{k} or b*a = pi_{k}");
    let _ = writeln!(out, "  label=\"Z_{k} (n={n})\";");
    for t in &store {
        if *t == pi {
            let _ = writeln!(out, "  \"{t}\" [peripheries=2, label=\"{t} = pi_{k}\"];");
        } else {
            let _ = writeln!(out, "  \"{t}\" [label=\"{t}\"];");
        }
    }
    for (i, a) in store.iter().enumerate() {
        for (j, b) in store.iter().enumerate().skip(i) {
            let ab = a.compose(b)?;
            let annihilates = ab == pi || (i != j && b.compose(a)? == pi);
            if annihilates {
                let _ = writeln!(out, "  \"{a}\" -- \"{b}\";");
            }
        }
    }
    let _ = writeln!(out, "}}");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_the_small_graph() {
        let dot = zero_divisor_graph(3, 1).unwrap();
        // Z_1 at n = 3 is {π_1, [1,1,2]} and [1,1,2] squares to π_1.
        assert!(dot.starts_with("graph zero_divisors {"));
        assert!(dot.contains("\"[1,1,1]\" [peripheries=2, label=\"[1,1,1] = pi_1\"];"));
        assert!(dot.contains("\"[1,1,2]\" [label=\"[1,1,2]\"];"));
        assert!(dot.contains("\"[1,1,1]\" -- \"[1,1,2]\";"));
        assert!(dot.contains("\"[1,1,2]\" -- \"[1,1,2]\";"));
        assert!(dot.trim_end().ends_with('}'));
    }

    #[test]
    fn edges_respect_the_annihilation_relation() {
        let dot = zero_divisor_graph(4, 2).unwrap();
        // π_2 composed with itself is π_2: self-loop present.
        assert!(dot.contains("\"[2,2,2,2]\" -- \"[2,2,2,2]\";"));
        // Deterministic output.
        assert_eq!(dot, zero_divisor_graph(4, 2).unwrap());
    }
}
