#pragma once

#include <string>
#include <variant>

#include "deborder/deborder.hpp"

namespace deborder {

enum class DocumentKind { Polynomial, Border, Waring, Report };

const char* to_string(DocumentKind kind);

struct ReportDocument {
  DeborderReport report;
  DeborderConfig config;
};

using Document =
    std::variant<HomoPoly<Rational>, BorderDecomposition, WaringDecomposition, ReportDocument>;

DocumentKind kind_of(const Document& doc);

/// Canonical JSON text (compact, one line). Equal documents give equal text.
std::string serialize(const Document& doc);
/// Throws ParseError on malformed JSON or payloads that break the format.
Document parse_document(const std::string& text);

std::string serialize_rational(const Rational& q);
std::string serialize_eps(const EpsScalar& s);

}  // namespace deborder
