#ifndef DELSTAR_JSON_IO_HPP
#define DELSTAR_JSON_IO_HPP

#include <json.hpp>

#include "delstar/criteria.hpp"
#include "delstar/reduce.hpp"

namespace delstar {

/* ordered_json keeps the emitted key order fixed, so reruns of any command
 * produce byte-identical files. */
using Json = nlohmann::ordered_json;

constexpr const char* kToolVersion = "1.0.0";

/* File shapes. Rationals are strings "p/q" ("p" when q = 1); zero
 * denominators are rejected on input.
 *
 *   lattice      { "name"?: str, "dim": int, "gram": [["p/q", ...], ...] }
 *   star         { "lattice": ..., "provenance": str,
 *                  "cells": [{ "vertices": [[int, ...], ...],
 *                              "center": ["p/q", ...],
 *                              "sq_radius": "p/q" }, ...] }
 *   graph        { "vertices": [[int, ...], ...], "edges": [[i, j], ...],
 *                  "witnesses": [{ "cell": k, "triangle": [a, b, c] }, ...] }
 *   certificate  { "target": { "<edge index>": "p/q" },
 *                  "terms": [["p/q", basic_index], ...] }
 *   report       { "criteria": { "primitive", "zhitomirski", "ordine",
 *                                "basic_generation": { "holds", "rank",
 *                                                      "dim", "vacuous" },
 *                                "no_triangles" },
 *                  "conclusion": str }  (+ "version", "input_hashes")
 *
 * Readers throw std::invalid_argument for any shape or value problem;
 * messages name the offending key. Stars are checked on input: every vertex
 * must lie at sq_radius from the center under the lattice Gram matrix.
 * Graph files must keep vertices and edge pairs sorted (index lookups binary
 * search).
 */
Json lattice_to_json(const Lattice& l);
Lattice lattice_from_json(const Json& j);

Json star_to_json(const DeloneStar& s);
DeloneStar star_from_json(const Json& j);

Json graph_to_json(const VenkovGraph& g);
VenkovGraph graph_from_json(const Json& j);

Json cycle_to_json(const CycleVector& x);
CycleVector cycle_from_json(const Json& j);

Json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

Json report_to_json(const CriteriaReport& r);

/* Certificate object extended with "trace" (one entry per splice: stage name,
 * target index, coefficient, local terms) and the "s_only" skeleton cycle. */
Json reduce_result_to_json(const ReduceResult& r);

/* 64-bit FNV-1a of the bytes, as 16 lowercase hex digits. */
std::string fnv1a64_hex(const std::string& bytes);

std::string read_text_file(const std::string& path);  // std::runtime_error

/* Writes path.tmp in the same directory, then renames over the target, so a
 * failed run never leaves a partial file behind. */
void write_text_file_atomic(const std::string& path, const std::string& text);

Json parse_json_text(const std::string& text);  // std::invalid_argument

}  // namespace delstar

#endif
