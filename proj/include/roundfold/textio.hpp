#pragma once

#include <optional>
#include <string>

#include "roundfold/bundles.hpp"
#include "roundfold/foldmap.hpp"
#include "roundfold/gysin.hpp"
#include "roundfold/homology.hpp"

namespace roundfold {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

// Fiber expression grammar used in descriptor files and on the command line:
//   sphere(k) | disc(k) | sphere_minus_discs(k,h) | torus(g) | empty
//   | product(a,b) | disjoint_union(a,b)
//   | explicit(dim=D;h0=G;...;hD=G)     with G ::= 0 | term(+term)*,
//                                            term ::= Z | Z^r | Z/d
ManifoldHomology parse_homology_expression(const std::string& text);
std::string homology_expression(const ManifoldHomology& m);

AbGroup parse_group_expression(const std::string& text);
std::string group_expression(const AbGroup& g);

// The zero-or-forced map written as `auto` in descriptor files: zero when an
// endpoint group vanishes, the component fold when the target is connected in
// degree 0, the identity when source and target agree. Returns nullopt when
// the shapes force nothing.
std::optional<HomMatrix> auto_inclusion(const AbGroup& source, const AbGroup& target, int degree,
                                        Ring ring);

std::string serialize(const FoldMapDescriptor& d);
FoldMapDescriptor parse_descriptor(const std::string& text);

std::string serialize(const BundleDescriptor& b);
BundleDescriptor parse_bundle(const std::string& text);

std::string serialize(const FourManifold& m);
FourManifold parse_four_manifold(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace roundfold
