#pragma once

// Built-in catalog: every group of order p, p^2 and p^3 for p in {2, 3, 5}
// and all fourteen groups of order 16. Mirrors data/catalog.txt.

#include <string_view>

#include "rosegbs/pcgroup.hpp"

namespace rosegbs {

inline constexpr std::string_view kBuiltinCatalogText = R"CATALOG(# Built-in catalog of small p-groups as power-commutator presentations.
# Regenerate with tools/gen_catalog.py.
group C2 p=2 n=1
end
group C4 p=2 n=2
pow 1 = g2^1
end
group C2xC2 p=2 n=2
end
group C8 p=2 n=3
pow 1 = g2^1
pow 2 = g3^1
end
group C4xC2 p=2 n=3
pow 1 = g2^1
end
group C2xC2xC2 p=2 n=3
end
group D8 p=2 n=3
pow 1 = g3^1
comm 2 1 = g3^1
end
group Q8 p=2 n=3
pow 1 = g3^1
pow 2 = g3^1
comm 2 1 = g3^1
end
group C16 p=2 n=4
pow 1 = g2^1
pow 2 = g3^1
pow 3 = g4^1
end
group C4xC4 p=2 n=4
pow 1 = g2^1
pow 3 = g4^1
end
group C4xC2:C2 p=2 n=4
pow 1 = g2^1
comm 3 1 = g4^1
end
group C4:C4 p=2 n=4
pow 1 = g3^1
pow 2 = g4^1
comm 2 1 = g3^1
end
group C8xC2 p=2 n=4
pow 1 = g2^1
pow 2 = g3^1
end
group M16 p=2 n=4
pow 1 = g2^1
pow 2 = g4^1
comm 3 1 = g4^1
end
group D16 p=2 n=4
pow 1 = g3^1
pow 3 = g4^1
comm 2 1 = g3^1
comm 3 2 = g4^1
end
group SD16 p=2 n=4
pow 1 = g3^1
pow 3 = g4^1
comm 2 1 = g3^1 g4^1
comm 3 2 = g4^1
end
group Q16 p=2 n=4
pow 1 = g3^1
pow 2 = g4^1
pow 3 = g4^1
comm 2 1 = g3^1
comm 3 2 = g4^1
end
group C4xC2xC2 p=2 n=4
pow 1 = g2^1
end
group C2xD8 p=2 n=4
pow 2 = g4^1
comm 3 2 = g4^1
end
group C2xQ8 p=2 n=4
pow 2 = g4^1
pow 3 = g4^1
comm 3 2 = g4^1
end
group C4oD8 p=2 n=4
pow 1 = g4^1
comm 3 2 = g4^1
end
group C2xC2xC2xC2 p=2 n=4
end
group C3 p=3 n=1
end
group C9 p=3 n=2
pow 1 = g2^1
end
group C3xC3 p=3 n=2
end
group C27 p=3 n=3
pow 1 = g2^1
pow 2 = g3^1
end
group C9xC3 p=3 n=3
pow 1 = g2^1
end
group C3xC3xC3 p=3 n=3
end
group Heis27 p=3 n=3
comm 2 1 = g3^1
end
group M27 p=3 n=3
pow 1 = g3^1
comm 2 1 = g3^1
end
group C5 p=5 n=1
end
group C25 p=5 n=2
pow 1 = g2^1
end
group C5xC5 p=5 n=2
end
group C125 p=5 n=3
pow 1 = g2^1
pow 2 = g3^1
end
group C25xC5 p=5 n=3
pow 1 = g2^1
end
group C5xC5xC5 p=5 n=3
end
group Heis125 p=5 n=3
comm 2 1 = g3^1
end
group M125 p=5 n=3
pow 1 = g3^1
comm 2 1 = g3^1
end
)CATALOG";

inline Catalog const& builtin_catalog() {
  static Catalog const cat = parse_catalog(kBuiltinCatalogText);
  return cat;
}

}  // namespace rosegbs
