#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "wdg/compare.hpp"
#include "wdg/wdigraph.hpp"
#include "wdg/wgraph.hpp"

namespace wdg {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_ = 0;
};

using Document = std::variant<WDigraph, WGraph>;

// Line-oriented format, '#' comments. Throws ParseError.
Document parse_document(const std::string& text);
WDigraph parse_digraph(const std::string& text);
WGraph parse_wgraph(const std::string& text);
// Accepts a full document or a bare generators:/order: header.
CoxeterMatrix parse_coxeter_header(const std::string& text);

std::string emit(const WDigraph& g);
std::string emit(const WGraph& p);
std::string emit(const Document& d);

enum class ReportFormat { text, json };

std::string render_side_report(const SideInvariants& side,
                               const CoxeterMatrix& cm, ReportFormat format);
std::string render_invariant_report(const InvariantReport& report,
                                    const CoxeterMatrix& cm,
                                    ReportFormat format);
std::string render_certificate(const IsoCertificate& cert);
std::string render_theorem_report(const TheoremReport& report);

}  // namespace wdg
