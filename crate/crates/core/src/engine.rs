//! The full query pipeline over one input graph.

use crate::beer_base::BeerBaseTables;
use crate::dual::{Chain, Chains, DualTree};
use crate::error::{Error, Result};
use crate::graph::{BeerGraph, FaceId, VertexId};
use crate::normalize::{normalize, NormalizedGraph};
use crate::oracle::BeerDistanceOracle;
use crate::weight::Weight;

/// Normalization, dual, beer-base tables, distance oracle and fan chains for
/// one graph. Immutable after construction; all queries take `&self`.
///
/// Distances are identical in the input and the normalized graph; reported
/// walks are translated back to the input graph.
pub struct Engine {
    oracle: BeerDistanceOracle,
    chains: Chains,
}

impl Engine {
    /// Normalizes `graph` and builds every index.
    pub fn new(graph: &BeerGraph) -> Result<Engine> {
        Self::with_root(graph, None)
    }

    /// As [`Engine::new`], with the dual rooted at `root`.
    pub fn with_root(graph: &BeerGraph, root: Option<FaceId>) -> Result<Engine> {
        Self::from_normalized(normalize(graph)?, root)
    }

    pub fn from_normalized(norm: NormalizedGraph, root: Option<FaceId>) -> Result<Engine> {
        let oracle = BeerDistanceOracle::build_rooted(norm, root)?;
        let chains = Chains::build(oracle.graph(), oracle.tables().edge_beer_all())?;
        Ok(Engine { oracle, chains })
    }

    pub fn oracle(&self) -> &BeerDistanceOracle {
        &self.oracle
    }

    pub fn normalized(&self) -> &NormalizedGraph {
        self.oracle.normalized()
    }

    /// The normalized graph.
    pub fn graph(&self) -> &BeerGraph {
        self.oracle.graph()
    }

    /// The input graph.
    pub fn original(&self) -> &BeerGraph {
        self.oracle.normalized().original()
    }

    pub fn dual(&self) -> &DualTree {
        self.oracle.dual()
    }

    pub fn tables(&self) -> &BeerBaseTables {
        self.oracle.tables()
    }

    pub fn chains(&self) -> &Chains {
        &self.chains
    }

    /// The chain `ρ_v`.
    pub fn chain(&self, v: VertexId) -> Result<Chain<'_>> {
        self.check(v)?;
        Ok(self.chains.chain(self.graph(), v))
    }

    pub(crate) fn check(&self, v: VertexId) -> Result<()> {
        let n = self.graph().n();
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        Ok(())
    }

    pub fn dist(&self, u: VertexId, v: VertexId) -> Result<Weight> {
        self.oracle.query_dist(u, v)
    }

    pub fn beer_dist(&self, u: VertexId, v: VertexId) -> Result<Weight> {
        self.oracle.query_beer_dist(u, v)
    }
}
