#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "commgraph/distance.hpp"
#include "commgraph/io.hpp"

namespace cg {

// One equivalence class of the relation C(A) = C(B). Members share their
// centralizer, hence their neighborhoods; distinct members are adjacent.
struct CensusClass {
    std::string signature; // canonical centralizer RREF signature
    Matrix rep;            // first class member in enumeration order
    long long size = 0;
};

// Quotient of the commuting graph by centralizer equality. Distances
// between inequivalent matrices coincide with quotient distances.
class CensusGraph {
  public:
    CensusGraph(Field f, int n) : field_(std::move(f)), n_(n) {}

    const Field& field() const { return field_; }
    int n() const { return n_; }
    const std::vector<CensusClass>& classes() const { return classes_; }
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }
    const std::vector<int>& component() const { return component_; }
    int components() const { return components_; }

    // Class index of a non-scalar matrix; computes its centralizer signature.
    int class_of(const Matrix& A) const;

    json to_json() const;
    static CensusGraph from_json(const json& j);

    friend CensusGraph census_build(const Field& f, int n, const Int& budget);

  private:
    Field field_;
    int n_;
    std::vector<CensusClass> classes_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> component_;
    int components_ = 0;
    std::unordered_map<std::string, int> index_;

    void finalize(); // adjacency + components from classes_
};

Int census_default_budget(); // 2^24 matrices

CensusGraph census_build(const Field& f, int n, const Int& budget);
CensusGraph census_build(const Field& f, int n);

// Quotient BFS distances from class src; -1 means unreachable.
std::vector<int> census_bfs(const CensusGraph& g, int src);

DistanceResult census_distance(const CensusGraph& g, const Matrix& A, const Matrix& B);

struct ComponentReport {
    int id = 0;
    int class_count = 0;
    long long vertex_count = 0;
    int diameter = 0; // over matrices, not classes
    std::map<int, long long> ecc_histogram; // eccentricity -> matrix count
};

struct DiameterReport {
    bool connected = false;
    std::vector<ComponentReport> components;
    // Real-graph eccentricity per class (same for every member).
    std::vector<int> class_eccentricity;
};

DiameterReport census_diameter(const CensusGraph& g);

json diameter_report_to_json(const CensusGraph& g, const DiameterReport& r);

} // namespace cg
