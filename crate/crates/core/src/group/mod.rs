//! The groups acting on the family: `Γ = PGL(2, Z) ⋉ Σ` at parameters zero,
//! the free product of the three involutions `τ_i` in general, and their
//! images in `PGL(2, Z)` and `S₄`.

pub mod generator;
pub mod horowitz;
pub mod perm;
pub mod pgl;
pub mod s4;
pub mod signed_perm;
pub mod word;

pub use generator::{dehn_twist, dehn_twist_symbolic, generator, generator_symbolic, specialize_params, Generator, Twist};
pub use horowitz::{horowitz_decompose, is_automorphism, jacobian_sign, Decomposition};
pub use perm::Perm;
pub use pgl::{generator_matrix, pgl_characters, word_to_pgl, PglCharacters, PglClass};
pub use s4::{gamma_to_s4, singular_points};
pub use signed_perm::{affine_stabilizer, is_group, SignedPerm};
pub use word::{apply_letter, word_to_map, GroupWord};
