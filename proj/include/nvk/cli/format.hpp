#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nvk/algebras.hpp"
#include "nvk/bialgebra.hpp"
#include "nvk/doubling.hpp"
#include "nvk/representations.hpp"

namespace nvk::cli {

enum class ParseErrorKind { Syntax, UnknownBasisName, FieldMismatch, DuplicateEntry, UnknownObject };

const char* parse_error_name(ParseErrorKind k);

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& msg);
    ParseErrorKind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    ParseErrorKind kind_;
    std::size_t line_, column_;
};

// An algebra block may also carry a coproduct, a bilinear form and named 2-tensors.
struct AlgebraBlock {
    std::string name;
    Algebra algebra;
    std::optional<Coalgebra> coalgebra;
    std::optional<Mat> form;
    std::map<std::string, Ten2> tensors;
};

struct PreNovikovBlock {
    std::string name;
    PreNovikovAlgebra algebra;
};

struct RepresentationBlock {
    std::string name;
    std::string algebra;  // name of an algebra block
    Representation rep;
};

struct MatchedPairBlock {
    std::string name;
    std::string a, b;
    MatchedPair pair;
};

struct Document {
    Field field;
    std::vector<AlgebraBlock> algebras;
    std::vector<PreNovikovBlock> prenovikov;
    std::vector<RepresentationBlock> representations;
    std::vector<MatchedPairBlock> matched_pairs;

    // First block if name is empty; throws InvalidArgument when missing.
    const AlgebraBlock& algebra(const std::string& name = "") const;
    const PreNovikovBlock& pre_novikov(const std::string& name = "") const;
    const RepresentationBlock& representation(const std::string& name = "") const;
    const MatchedPairBlock& matched_pair(const std::string& name = "") const;
};

Document parse_document(const std::string& text);
Document parse_file(const std::string& path);
std::string serialize(const Document& doc);

// "1/2 e1 + e2" against a basis.
Vec parse_vector(const std::string& text, const Basis& b, const Field& f);
// "e1^e2 - e2^e1" (the caret is a tensor sign, not a wedge).
Ten2 parse_tensor2(const std::string& text, const Basis& left, const Basis& right, const Field& f);

std::string format_vector(const Vec& v, const Basis& b);
std::string format_tensor2(const Ten2& t, const Basis& left, const Basis& right, const std::string& sep);

}  // namespace nvk::cli
