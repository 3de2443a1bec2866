//! Moyal star product and bracket, ordering maps into the Weyl algebra, and
//! transport of star products by formal operator series.

mod moyal;
mod ordering;
mod symplectic;
mod transport;

pub use moyal::{
    moyal_bracket, moyal_star, moyal_star_report, poisson_power, MonomialStarCache, Moyal, StandardStar,
    StarProduct, StarReport, NU,
};
pub use ordering::{operator_symbol, order_quantize, order_quantize_series, OrderedOperator, Scheme};
pub use symplectic::SymplecticStructure;
pub use transport::{transport_product, OperatorSeries, Transported};
