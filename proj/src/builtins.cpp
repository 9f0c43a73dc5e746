#include <algorithm>
#include <array>
#include <utility>

#include "brickwall/rule.hpp"

namespace brickwall {

namespace {

// Offsets are relative to the image anchor (l1 * x, l2 * y) of the parent.
constexpr std::array<std::pair<std::string_view, std::string_view>, 6> sources{{
    {"ptm", R"(# Prouhet-Thue-Morse letters rendered as 2x1 and 3x1 bricks
rule ptm
engine block skew 0
expansion 2 2
brick 0 2 1 color #ff8000
brick 1 3 1 color #c67339
block 0 { row: 0 1 ; row: 1 0 }
block 1 { row: 1 0 ; row: 0 1 }
end
)"},
    {"ptm_skewed", R"(# Prouhet-Thue-Morse with every row shifted one unit to the right
rule ptm_skewed
engine block skew 1
expansion 2 2
brick 0 2 1 color #ff8000
brick 1 3 1 color #c67339
block 0 { row: 0 1 ; row: 1 0 }
block 1 { row: 1 0 ; row: 0 1 }
end
)"},
    {"sigma3", R"(# three-brick pseudo-self-similar rule
rule sigma3
engine geometric
expansion 2 2
brick B11 1 1 color #ff9900
brick B21 2 1 color #ff6600
brick B22 2 2 color #c67339
image B11 { B21 @ -1 0 ; B21 @ 0 1 }
image B21 { B21 @ -1 0 ; B22 @ 1 0 ; B11 @ 0 1 ; B11 @ 3 1 }
image B22 {
  B21 @ -1 0 ; B22 @ 1 0 ; B11 @ 0 1 ; B11 @ 3 1 ;
  B21 @ -1 2 ; B11 @ 1 2 ; B11 @ 2 2 ;
  B21 @ 0 3 ; B21 @ 2 3
}
end
)"},
    {"rows23", R"(# no-crossings rule with horizontal expansion 2, vertical expansion 3
rule rows23
engine geometric
expansion 2 3
brick B11 1 1 color #ff9900
brick B21 2 1 color #cc6633
image B11 { B21 @ -1 0 ; B11 @ 0 1 ; B11 @ 1 1 ; B21 @ 0 2 }
image B21 {
  B21 @ -1 0 ; B11 @ 1 0 ; B11 @ 2 0 ;
  B11 @ 0 1 ; B21 @ 1 1 ; B11 @ 3 1 ;
  B21 @ 0 2 ; B21 @ 2 2
}
end
)"},
    {"random_self_similar", R"(# self-similar random rule; the two options of each brick are permutations
rule random_self_similar
engine geometric
expansion 2 2
brick B12 1 2 color #ff9900
brick B22 2 2 color #cc6633
image B12 prob 1/2 { B22 @ 0 0 ; B12 @ 0 2 ; B12 @ 1 2 }
image B12 prob 1/2 { B12 @ 0 0 ; B12 @ 1 0 ; B22 @ 0 2 }
image B22 prob 1/2 { B12 @ 0 0 ; B22 @ 1 0 ; B12 @ 3 0 ; B22 @ 0 2 ; B12 @ 2 2 ; B12 @ 3 2 }
image B22 prob 1/2 { B12 @ 0 0 ; B22 @ 1 0 ; B12 @ 3 0 ; B12 @ 0 2 ; B12 @ 1 2 ; B22 @ 2 2 }
end
)"},
    {"random_pp", R"(# pseudo-self-similar random rule; the coin shows B22 images with probability p
rule random_pp
engine geometric
expansion 2 2
brick B12 1 2 color #b3b3ff
brick B22 2 2 color #6c6c93
image B12 prob 1-p { B12 @ -1 0 ; B12 @ 0 0 ; B12 @ 0 2 ; B12 @ 1 2 }
image B12 prob p { B22 @ -1 0 ; B22 @ 0 2 }
image B22 prob 1-p {
  B12 @ -1 0 ; B12 @ 0 0 ; B12 @ 1 0 ; B12 @ 2 0 ;
  B12 @ 0 2 ; B12 @ 1 2 ; B12 @ 2 2 ; B12 @ 3 2
}
image B22 prob p { B22 @ -1 0 ; B22 @ 1 0 ; B22 @ 0 2 ; B22 @ 2 2 }
end
)"},
}};

}

const std::vector<std::string>& builtin_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, src] : sources)
            v.emplace_back(name);
        return v;
    }();
    return names;
}

bool is_builtin(std::string_view name)
{
    return std::any_of(sources.begin(), sources.end(), [&](const auto& s) { return s.first == name; });
}

std::string_view builtin_source(std::string_view name)
{
    for (const auto& [n, src] : sources)
        if (n == name)
            return src;
    throw error("unknown builtin rule '" + std::string(name) + "'");
}

substitution_rule builtin(std::string_view name, std::optional<rational> p)
{
    return parse_rule(builtin_source(name), std::move(p));
}

}
