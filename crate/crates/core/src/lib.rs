//! Capacity outer bounds for private quadratic monomial computation, and
//! searches for monomial orders that tighten them.
//!
//! `f` messages of i.i.d. uniform `F_q` symbols give `mu = f(f-1)/2`
//! candidate monomials `W^(k) W^(l)`, identified with the edges of `K_f`.
//! For an order `S` of the monomials and `n` databases the bound is
//! `H_min / sum_v n^-(v-1) H(s_v | s_1, ..., s_{v-1})`; lower is tighter.
//!
//! Modules:
//! - [`entropy`]: exact joint/conditional entropies with memoization.
//! - [`graph`]: distances, components, matchings, cycle counting on `K_f` subgraphs.
//! - [`coloring`]: proper edge-colorings of `K_f` and color-grouped orders.
//! - [`bound`]: evaluation of the bound and its prefix version.
//! - [`search`]: EC, E-EC, LDF, EBG, exhaustive and directed random search.

pub mod bound;
pub mod coloring;
pub mod edge;
pub mod entropy;
pub mod error;
pub mod field;
pub mod graph;
pub mod search;
pub mod summation;

pub use bound::{capacity_outer_bound, partial_bound, BoundParams, BoundReport};
pub use coloring::{default_color_order, ec_order, ColorOrder, ColorPartition};
pub use edge::{edge_index, mu, Edge, EdgeSet, MonomialOrder};
pub use entropy::{EntropyCache, EntropyEngine, JointDistribution};
pub use error::{Error, Result};
pub use field::FieldSpec;
pub use graph::{CycleMode, CycleVector, Distance, Graph};
pub use search::{
    count_distinct_paths, directed_random_search, e_ec_search, ebg_order, exhaustive_search,
    ldf_order, order_inner_edges, run, ExhaustiveOptions, LdfStart, Method, SearchConfig,
    SearchResult, TiePolicy,
};
