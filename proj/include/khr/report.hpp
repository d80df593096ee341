#ifndef KHR_REPORT_HPP_
#define KHR_REPORT_HPP_

#include <deque>
#include <string>
#include <string_view>
#include <vector>

#include "index_set.hpp"

namespace khr {

  // Outcome of one exhaustively checked law. On failure `witness` holds the
  // element tuple that breaks it, in the order named by `detail`.
  struct CheckResult {
    std::string       id;
    bool              passed = true;
    std::vector<Elem> witness;
    std::string       detail;
  };

  struct VerificationReport {
    std::deque<CheckResult> checks;

    bool ok() const noexcept {
      for (auto const& c : checks) {
        if (!c.passed) {
          return false;
        }
      }
      return true;
    }

    CheckResult const* find(std::string_view id) const noexcept {
      for (auto const& c : checks) {
        if (c.id == id) {
          return &c;
        }
      }
      return nullptr;
    }

    bool passed(std::string_view id) const noexcept {
      auto const* c = find(id);
      return c != nullptr && c->passed;
    }

    CheckResult const* first_failure() const noexcept {
      for (auto const& c : checks) {
        if (!c.passed) {
          return &c;
        }
      }
      return nullptr;
    }

    CheckResult& add(std::string id) {
      checks.push_back(CheckResult{std::move(id), true, {}, {}});
      return checks.back();
    }

    void append(VerificationReport const& that) {
      checks.insert(checks.end(), that.checks.begin(), that.checks.end());
    }

    std::string summary() const {
      std::string out;
      for (auto const& c : checks) {
        out += c.id + ": " + (c.passed ? "pass" : "FAIL");
        if (!c.passed) {
          out += " witness=(";
          for (std::size_t i = 0; i < c.witness.size(); ++i) {
            out += (i ? "," : "") + std::to_string(c.witness[i]);
          }
          out += ")";
          if (!c.detail.empty()) {
            out += " " + c.detail;
          }
        }
        out += "\n";
      }
      return out;
    }
  };

  inline void fail(CheckResult&      c,
                   std::vector<Elem> witness,
                   std::string       detail) {
    c.passed  = false;
    c.witness = std::move(witness);
    c.detail  = std::move(detail);
  }

}  // namespace khr

#endif  // KHR_REPORT_HPP_
