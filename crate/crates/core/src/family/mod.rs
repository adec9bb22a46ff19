//! The cubic family `κ_{P,Q,R}`: critical loci, trace dictionaries and the
//! lines on the smooth fibers of `κ`.

pub mod critical;
pub mod kappa;
pub mod lines;
pub mod traces;

pub use critical::{critical_points, critical_values, eliminant, fiber_is_smooth, CriticalPoint, CriticalValue, PointCoords};
pub use kappa::{build_kappa, build_kappa_symbolic, gradient, hessian, is_critical, local_chart_hessian, Hessian, KappaParams};
pub use lines::{class_gram, line_incidence, lines_on_fiber, Axis, Line};
pub use traces::{sphere_character, torus_character, traces_to_params, traces_to_params_symbolic, Sl2, SphereCharacter, TorusCharacter};
