#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dpcolor/configuration.hpp"
#include "dpcolor/error.hpp"
#include "dpcolor/io.hpp"

namespace dpcolor {

/// Embedded copies of data/configurations/v1/*.json (kept identical by a test).
inline const std::vector<std::pair<std::string, std::string>>& builtin_sources() {
  static const std::vector<std::pair<std::string, std::string>> sources{
    {"lemma-2.3b", R"json({
  "name": "lemma-2.3b",
  "description": "internal (3,3,4)-face xyz sharing (3,4)-edges xy and yz with two internal (3,3,3,3,3,4)-faces",
  "vertices": [
    {
      "id": "y",
      "degree": 4,
      "exact": true,
      "internal": true
    },
    {
      "id": "x",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "z",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "u1",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "u2",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "u3",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "u4",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "v1",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "v2",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "v3",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "v4",
      "degree": 3,
      "exact": true,
      "internal": true
    }
  ],
  "edges": [
    [
      "x",
      "y"
    ],
    [
      "y",
      "u1"
    ],
    [
      "u1",
      "u2"
    ],
    [
      "u2",
      "u3"
    ],
    [
      "u3",
      "u4"
    ],
    [
      "u4",
      "x"
    ],
    [
      "y",
      "z"
    ],
    [
      "z",
      "x"
    ],
    [
      "z",
      "v1"
    ],
    [
      "v1",
      "v2"
    ],
    [
      "v2",
      "v3"
    ],
    [
      "v3",
      "v4"
    ],
    [
      "v4",
      "y"
    ]
  ],
  "boundary": [],
  "order": [
    "y",
    "v4",
    "v3",
    "v2",
    "v1",
    "z",
    "x",
    "u4",
    "u3",
    "u2",
    "u1"
  ],
  "faces": [
    [
      "x",
      "y",
      "z"
    ],
    [
      "x",
      "y",
      "u1",
      "u2",
      "u3",
      "u4"
    ],
    [
      "z",
      "v1",
      "v2",
      "v3",
      "v4",
      "y"
    ]
  ]
}
)json"},
    {"lemma-2.3c", R"json({
  "name": "lemma-2.3c",
  "description": "internal (3,3,4)-face xyz adjacent to a (3,3,3,3,3,3)-face and an internal (3,3,3,3,3,4)-face, u1 = v4",
  "vertices": [
    {
      "id": "z",
      "degree": 4,
      "exact": true,
      "internal": true
    },
    {
      "id": "x",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "y",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "u1",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "u2",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "u3",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "u4",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "v1",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "v2",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "v3",
      "degree": 3,
      "exact": true,
      "internal": true
    }
  ],
  "edges": [
    [
      "x",
      "y"
    ],
    [
      "y",
      "u1"
    ],
    [
      "u1",
      "u2"
    ],
    [
      "u2",
      "u3"
    ],
    [
      "u3",
      "u4"
    ],
    [
      "u4",
      "x"
    ],
    [
      "y",
      "z"
    ],
    [
      "z",
      "x"
    ],
    [
      "z",
      "v1"
    ],
    [
      "v1",
      "v2"
    ],
    [
      "v2",
      "v3"
    ],
    [
      "v3",
      "u1"
    ]
  ],
  "boundary": [],
  "order": [
    "x",
    "z",
    "v1",
    "v2",
    "v3",
    "y",
    "u1",
    "u2",
    "u3",
    "u4"
  ],
  "faces": [
    [
      "x",
      "y",
      "z"
    ],
    [
      "x",
      "y",
      "u1",
      "u2",
      "u3",
      "u4"
    ],
    [
      "z",
      "v1",
      "v2",
      "v3",
      "u1",
      "y"
    ]
  ]
}
)json"},
    {"lemma-3.3a-case1", R"json({
  "name": "lemma-3.3a-case1",
  "description": "internal 7-face v1..v7 on the (3,3,3)-face v1v2v12 and the 3-face v4v5v45 with d(v4) = 4",
  "vertices": [
    {
      "id": "v1",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "v2",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "v3",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "v4",
      "degree": 4,
      "exact": true,
      "internal": true
    },
    {
      "id": "v5",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "v6",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "v7",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "v12",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "v45",
      "degree": 3,
      "exact": true,
      "internal": true
    }
  ],
  "edges": [
    [
      "v1",
      "v2"
    ],
    [
      "v2",
      "v3"
    ],
    [
      "v3",
      "v4"
    ],
    [
      "v4",
      "v5"
    ],
    [
      "v5",
      "v6"
    ],
    [
      "v6",
      "v7"
    ],
    [
      "v7",
      "v1"
    ],
    [
      "v1",
      "v12"
    ],
    [
      "v2",
      "v12"
    ],
    [
      "v4",
      "v45"
    ],
    [
      "v5",
      "v45"
    ]
  ],
  "boundary": [],
  "order": [
    "v2",
    "v3",
    "v4",
    "v45",
    "v5",
    "v6",
    "v7",
    "v1",
    "v12"
  ],
  "faces": [
    [
      "v1",
      "v2",
      "v3",
      "v4",
      "v5",
      "v6",
      "v7"
    ],
    [
      "v1",
      "v2",
      "v12"
    ],
    [
      "v4",
      "v5",
      "v45"
    ]
  ]
}
)json"},
    {"lemma-3.3a-case2", R"json({
  "name": "lemma-3.3a-case2",
  "description": "internal 7-face v1..v7 on the (3,3,3)-face v1v2v12 and the 3-face v4v5v45 with d(v5) = 4",
  "vertices": [
    {
      "id": "v1",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "v2",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "v3",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "v4",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "v5",
      "degree": 4,
      "exact": true,
      "internal": true
    },
    {
      "id": "v6",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "v7",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "v12",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "v45",
      "degree": 3,
      "exact": true,
      "internal": true
    }
  ],
  "edges": [
    [
      "v1",
      "v2"
    ],
    [
      "v2",
      "v3"
    ],
    [
      "v3",
      "v4"
    ],
    [
      "v4",
      "v5"
    ],
    [
      "v5",
      "v6"
    ],
    [
      "v6",
      "v7"
    ],
    [
      "v7",
      "v1"
    ],
    [
      "v1",
      "v12"
    ],
    [
      "v2",
      "v12"
    ],
    [
      "v4",
      "v45"
    ],
    [
      "v5",
      "v45"
    ]
  ],
  "boundary": [],
  "order": [
    "v1",
    "v7",
    "v6",
    "v5",
    "v45",
    "v4",
    "v3",
    "v2",
    "v12"
  ],
  "faces": [
    [
      "v1",
      "v2",
      "v3",
      "v4",
      "v5",
      "v6",
      "v7"
    ],
    [
      "v1",
      "v2",
      "v12"
    ],
    [
      "v4",
      "v5",
      "v45"
    ]
  ]
}
)json"},
    {"lemma-2.4", R"json({
  "name": "lemma-2.4",
  "description": "internal 6-face v1..v6 adjacent to the internal (3,3,3)-face v1v2v12 with d(v3) = d(v6) = 3; v is the third neighbor of v12",
  "vertices": [
    {
      "id": "v1",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "v2",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "v3",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "v6",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "v12",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "v4",
      "degree": 3,
      "exact": false,
      "internal": true
    },
    {
      "id": "v5",
      "degree": 3,
      "exact": false,
      "internal": true
    },
    {
      "id": "v"
    }
  ],
  "edges": [
    [
      "v1",
      "v2"
    ],
    [
      "v2",
      "v3"
    ],
    [
      "v3",
      "v4"
    ],
    [
      "v4",
      "v5"
    ],
    [
      "v5",
      "v6"
    ],
    [
      "v6",
      "v1"
    ],
    [
      "v1",
      "v12"
    ],
    [
      "v2",
      "v12"
    ],
    [
      "v12",
      "v"
    ]
  ],
  "boundary": [
    "v"
  ],
  "faces": [
    [
      "v1",
      "v2",
      "v3",
      "v4",
      "v5",
      "v6"
    ],
    [
      "v1",
      "v2",
      "v12"
    ]
  ]
}
)json"},
    {"lemma-2.5", R"json({
  "name": "lemma-2.5",
  "description": "path x u1 u2 y v1 v2 z with the internal (3,3,3)-face x'y'z' and d(x) = d(u1) = d(u2) = 3, d(y) = 4; y'' is the fourth neighbor of y",
  "vertices": [
    {
      "id": "x",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "u1",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "u2",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "x'",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "y'",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "z'",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "y",
      "degree": 4,
      "exact": true,
      "internal": true
    },
    {
      "id": "v1",
      "degree": 3,
      "exact": false,
      "internal": true
    },
    {
      "id": "v2",
      "degree": 3,
      "exact": false,
      "internal": true
    },
    {
      "id": "z",
      "degree": 3,
      "exact": false,
      "internal": true
    },
    {
      "id": "y''"
    }
  ],
  "edges": [
    [
      "x",
      "u1"
    ],
    [
      "u1",
      "u2"
    ],
    [
      "u2",
      "y"
    ],
    [
      "y",
      "v1"
    ],
    [
      "v1",
      "v2"
    ],
    [
      "v2",
      "z"
    ],
    [
      "x'",
      "y'"
    ],
    [
      "y'",
      "z'"
    ],
    [
      "z'",
      "x'"
    ],
    [
      "x",
      "x'"
    ],
    [
      "y",
      "y'"
    ],
    [
      "z",
      "z'"
    ],
    [
      "y",
      "y''"
    ]
  ],
  "boundary": [
    "y''"
  ],
  "faces": [
    [
      "x",
      "u1",
      "u2",
      "y",
      "y'",
      "x'"
    ],
    [
      "y",
      "v1",
      "v2",
      "z",
      "z'",
      "y'"
    ],
    [
      "x'",
      "y'",
      "z'"
    ]
  ]
}
)json"},
    {"lemma-3.3c", R"json({
  "name": "lemma-3.3c",
  "description": "internal 7-face v1..v7 adjacent to the internal (3,3,3)-faces v1v2v12 and v4v5v45 with d(v6) = 3; v is the third neighbor of v45",
  "vertices": [
    {
      "id": "v1",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "v2",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "v4",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "v5",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "v6",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "v12",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "v45",
      "degree": 3,
      "exact": true,
      "internal": true
    },
    {
      "id": "v3",
      "degree": 3,
      "exact": false,
      "internal": true
    },
    {
      "id": "v7",
      "degree": 3,
      "exact": false,
      "internal": true
    },
    {
      "id": "v"
    }
  ],
  "edges": [
    [
      "v1",
      "v2"
    ],
    [
      "v2",
      "v3"
    ],
    [
      "v3",
      "v4"
    ],
    [
      "v4",
      "v5"
    ],
    [
      "v5",
      "v6"
    ],
    [
      "v6",
      "v7"
    ],
    [
      "v7",
      "v1"
    ],
    [
      "v1",
      "v12"
    ],
    [
      "v2",
      "v12"
    ],
    [
      "v4",
      "v45"
    ],
    [
      "v5",
      "v45"
    ],
    [
      "v45",
      "v"
    ]
  ],
  "boundary": [
    "v"
  ],
  "faces": [
    [
      "v1",
      "v2",
      "v3",
      "v4",
      "v5",
      "v6",
      "v7"
    ],
    [
      "v1",
      "v2",
      "v12"
    ],
    [
      "v4",
      "v5",
      "v45"
    ]
  ]
}
)json"},
    {"bad-9-cycle-2", R"json({
  "name": "bad-9-cycle-2",
  "description": "9-cycle c0..c8 around a triangle abc joined to c0, c3, c6; three 6-faces each adjacent to the triangle",
  "vertices": [
    {
      "id": "c0"
    },
    {
      "id": "c1"
    },
    {
      "id": "c2"
    },
    {
      "id": "c3"
    },
    {
      "id": "c4"
    },
    {
      "id": "c5"
    },
    {
      "id": "c6"
    },
    {
      "id": "c7"
    },
    {
      "id": "c8"
    },
    {
      "id": "a"
    },
    {
      "id": "b"
    },
    {
      "id": "c"
    }
  ],
  "edges": [
    [
      "c0",
      "c1"
    ],
    [
      "c1",
      "c2"
    ],
    [
      "c2",
      "c3"
    ],
    [
      "c3",
      "c4"
    ],
    [
      "c4",
      "c5"
    ],
    [
      "c5",
      "c6"
    ],
    [
      "c6",
      "c7"
    ],
    [
      "c7",
      "c8"
    ],
    [
      "c8",
      "c0"
    ],
    [
      "a",
      "b"
    ],
    [
      "b",
      "c"
    ],
    [
      "c",
      "a"
    ],
    [
      "a",
      "c0"
    ],
    [
      "b",
      "c3"
    ],
    [
      "c",
      "c6"
    ]
  ],
  "boundary": [
    "c0",
    "c1",
    "c2",
    "c3",
    "c4",
    "c5",
    "c6",
    "c7",
    "c8"
  ],
  "faces": [
    [
      "a",
      "b",
      "c"
    ],
    [
      "c0",
      "c1",
      "c2",
      "c3",
      "b",
      "a"
    ],
    [
      "c3",
      "c4",
      "c5",
      "c6",
      "c",
      "b"
    ],
    [
      "c6",
      "c7",
      "c8",
      "c0",
      "a",
      "c"
    ]
  ],
  "outer": [
    "c0",
    "c1",
    "c2",
    "c3",
    "c4",
    "c5",
    "c6",
    "c7",
    "c8"
  ]
}
)json"},
  };
  return sources;
}

/// Names of the configurations proved with an ordering or an identification.
inline std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : builtin_sources()) {
    if (name.rfind("lemma-", 0) == 0) out.push_back(name);
  }
  return out;
}

inline Configuration builtin_configuration(const std::string& name) {
  for (const auto& [n, text] : builtin_sources()) {
    if (n == name) return io::configuration_from_json(io::parse_json(text, "builtin:" + n), "builtin:" + n);
  }
  throw Error(ErrorCode::kUnknownName, "unknown configuration " + name);
}

inline std::vector<Configuration> builtin_configurations() {
  std::vector<Configuration> out;
  for (const auto& name : builtin_names()) out.push_back(builtin_configuration(name));
  return out;
}

/// Bad 9-cycle templates. Only the second figure template is derivable from
/// the text; the first is not shipped.
inline std::vector<Configuration> bad9_templates() { return {builtin_configuration("bad-9-cycle-2")}; }

}  // namespace dpcolor
