pub mod auxiliary;
pub mod embedding;
mod flow;
pub mod girth;
pub mod mad;
pub mod threads;

pub use auxiliary::{build_auxiliary, build_g23, AuxiliaryError, AuxiliaryGraph, TwoThreadReading, G23};
pub use embedding::{parse_rotation, EmbeddingError, PlaneEmbedding};
pub use girth::{girth, shortest_cycle, Girth};
pub use mad::{average_degree, mad_exact, Mad};
pub use threads::{thread_decomposition, Incidence, NonThread, Thread, ThreadDecomposition};
