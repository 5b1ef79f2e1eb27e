#pragma once

#include <vector>

namespace bilevel {

enum class Side { X, Y };

/// Variable `var` is 1-based within its side.
struct Literal {
    Side side = Side::X;
    int var = 1;
    bool neg = false;

    friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;

/// CNF over existential X and universal Y variables, three literals per clause.
struct B2cnfFormula {
    int n1 = 0;
    int n2 = 0;
    std::vector<Clause> clauses;

    friend bool operator==(const B2cnfFormula&, const B2cnfFormula&) = default;
};

/// Throws MalformedClause unless every clause has exactly three literals with
/// in-range variables.
void validate(const B2cnfFormula& f);

}  // namespace bilevel
