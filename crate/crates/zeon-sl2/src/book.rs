//! Compiles the guide's code snippets as doc-tests so the book and the
//! library cannot drift apart.

#[cfg(doctest)]
mod chapters {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/boolean-lattice.md")]
    mod boolean_lattice {}
    #[doc = include_str!("../../../book/src/zeon-algebra.md")]
    mod zeon_algebra {}
    #[doc = include_str!("../../../book/src/operators.md")]
    mod operators {}
    #[doc = include_str!("../../../book/src/chains.md")]
    mod chains {}
    #[doc = include_str!("../../../book/src/group-elements.md")]
    mod group_elements {}
    #[doc = include_str!("../../../book/src/hamming-krawtchouk.md")]
    mod hamming_krawtchouk {}
    #[doc = include_str!("../../../book/src/johnson-scheme.md")]
    mod johnson_scheme {}
    #[doc = include_str!("../../../book/src/poset-hadamard.md")]
    mod poset_hadamard {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
