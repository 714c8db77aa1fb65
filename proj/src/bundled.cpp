#include "metasched/instance_io.hpp"

namespace metasched {

namespace {

constexpr std::string_view kTable1 = R"json({
  "format": "aoa-v1",
  "name": "table1",
  "arcs": [
    {
      "id": 1,
      "start": 0,
      "end": 2,
      "duration": 20,
      "demand": 1,
      "successors": [
        7,
        8,
        9
      ]
    },
    {
      "id": 2,
      "start": 0,
      "end": 5,
      "duration": 33,
      "demand": 1,
      "successors": [
        7
      ]
    },
    {
      "id": 3,
      "start": 0,
      "end": 8,
      "duration": 70,
      "demand": 1,
      "successors": [
        9
      ]
    },
    {
      "id": 4,
      "start": 1,
      "end": 3,
      "duration": 40,
      "demand": 1,
      "successors": [
        8,
        9
      ]
    },
    {
      "id": 5,
      "start": 1,
      "end": 5,
      "duration": 37,
      "demand": 1,
      "successors": [
        7
      ]
    },
    {
      "id": 6,
      "start": 1,
      "end": 6,
      "duration": 56,
      "demand": 1,
      "successors": [
        9
      ]
    },
    {
      "id": 7,
      "start": 2,
      "end": 7,
      "duration": 67,
      "demand": 1,
      "successors": [
        9
      ]
    },
    {
      "id": 8,
      "start": 2,
      "end": 8,
      "duration": 59,
      "demand": 1,
      "successors": [
        9
      ]
    },
    {
      "id": 9,
      "start": 2,
      "end": 9,
      "duration": 78,
      "demand": 1,
      "successors": []
    },
    {
      "id": 10,
      "start": 3,
      "end": 8,
      "duration": 54,
      "demand": 1,
      "successors": [
        9
      ]
    },
    {
      "id": 11,
      "start": 3,
      "end": 9,
      "duration": 54,
      "demand": 1,
      "successors": []
    },
    {
      "id": 12,
      "start": 4,
      "end": 5,
      "duration": 29,
      "demand": 1,
      "successors": [
        7
      ]
    },
    {
      "id": 13,
      "start": 4,
      "end": 6,
      "duration": 43,
      "demand": 1,
      "successors": [
        9
      ]
    },
    {
      "id": 14,
      "start": 5,
      "end": 7,
      "duration": 37,
      "demand": 1,
      "successors": [
        9
      ]
    },
    {
      "id": 15,
      "start": 6,
      "end": 9,
      "duration": 29,
      "demand": 1,
      "successors": []
    },
    {
      "id": 16,
      "start": 7,
      "end": 9,
      "duration": 11,
      "demand": 1,
      "successors": []
    },
    {
      "id": 17,
      "start": 8,
      "end": 9,
      "duration": 32,
      "demand": 1,
      "successors": []
    }
  ]
})json";

constexpr std::string_view kTable2 = R"json({
  "format": "tctp-v1",
  "name": "table2",
  "activities": [
    {
      "id": 1,
      "depends": [],
      "options": [
        {
          "duration": 14,
          "cost": 2400
        },
        {
          "duration": 15,
          "cost": 2150
        },
        {
          "duration": 16,
          "cost": 1900
        },
        {
          "duration": 21,
          "cost": 1500
        },
        {
          "duration": 24,
          "cost": 1200
        }
      ]
    },
    {
      "id": 2,
      "depends": [],
      "options": [
        {
          "duration": 15,
          "cost": 3000
        },
        {
          "duration": 18,
          "cost": 2400
        },
        {
          "duration": 20,
          "cost": 1800
        },
        {
          "duration": 23,
          "cost": 1500
        },
        {
          "duration": 25,
          "cost": 1000
        }
      ]
    },
    {
      "id": 3,
      "depends": [],
      "options": [
        {
          "duration": 15,
          "cost": 4500
        },
        {
          "duration": 22,
          "cost": 4000
        },
        {
          "duration": 33,
          "cost": 3200
        },
        {
          "duration": 33,
          "cost": 3200
        },
        {
          "duration": 33,
          "cost": 3200
        }
      ]
    },
    {
      "id": 4,
      "depends": [],
      "options": [
        {
          "duration": 12,
          "cost": 45000
        },
        {
          "duration": 16,
          "cost": 35000
        },
        {
          "duration": 20,
          "cost": 30000
        },
        {
          "duration": 20,
          "cost": 30000
        },
        {
          "duration": 20,
          "cost": 30000
        }
      ]
    },
    {
      "id": 5,
      "depends": [
        1
      ],
      "options": [
        {
          "duration": 22,
          "cost": 20000
        },
        {
          "duration": 24,
          "cost": 17500
        },
        {
          "duration": 28,
          "cost": 15000
        },
        {
          "duration": 30,
          "cost": 10000
        },
        {
          "duration": 30,
          "cost": 10000
        }
      ]
    },
    {
      "id": 6,
      "depends": [
        1
      ],
      "options": [
        {
          "duration": 14,
          "cost": 40000
        },
        {
          "duration": 18,
          "cost": 32000
        },
        {
          "duration": 24,
          "cost": 18000
        },
        {
          "duration": 24,
          "cost": 18000
        },
        {
          "duration": 24,
          "cost": 18000
        }
      ]
    },
    {
      "id": 7,
      "depends": [
        5
      ],
      "options": [
        {
          "duration": 9,
          "cost": 30000
        },
        {
          "duration": 15,
          "cost": 24000
        },
        {
          "duration": 18,
          "cost": 22000
        },
        {
          "duration": 18,
          "cost": 22000
        },
        {
          "duration": 18,
          "cost": 22000
        }
      ]
    },
    {
      "id": 8,
      "depends": [
        6
      ],
      "options": [
        {
          "duration": 14,
          "cost": 220
        },
        {
          "duration": 15,
          "cost": 215
        },
        {
          "duration": 16,
          "cost": 200
        },
        {
          "duration": 21,
          "cost": 208
        },
        {
          "duration": 24,
          "cost": 120
        }
      ]
    },
    {
      "id": 9,
      "depends": [
        6
      ],
      "options": [
        {
          "duration": 15,
          "cost": 300
        },
        {
          "duration": 18,
          "cost": 240
        },
        {
          "duration": 20,
          "cost": 180
        },
        {
          "duration": 23,
          "cost": 150
        },
        {
          "duration": 25,
          "cost": 100
        }
      ]
    },
    {
      "id": 10,
      "depends": [
        2,
        6
      ],
      "options": [
        {
          "duration": 15,
          "cost": 450
        },
        {
          "duration": 22,
          "cost": 400
        },
        {
          "duration": 33,
          "cost": 320
        },
        {
          "duration": 33,
          "cost": 320
        },
        {
          "duration": 33,
          "cost": 320
        }
      ]
    },
    {
      "id": 11,
      "depends": [
        7,
        8
      ],
      "options": [
        {
          "duration": 12,
          "cost": 450
        },
        {
          "duration": 16,
          "cost": 350
        },
        {
          "duration": 20,
          "cost": 300
        },
        {
          "duration": 20,
          "cost": 300
        },
        {
          "duration": 20,
          "cost": 300
        }
      ]
    },
    {
      "id": 12,
      "depends": [
        5,
        9,
        10
      ],
      "options": [
        {
          "duration": 22,
          "cost": 2000
        },
        {
          "duration": 24,
          "cost": 1750
        },
        {
          "duration": 28,
          "cost": 1500
        },
        {
          "duration": 30,
          "cost": 1000
        },
        {
          "duration": 30,
          "cost": 1000
        }
      ]
    },
    {
      "id": 13,
      "depends": [
        3
      ],
      "options": [
        {
          "duration": 14,
          "cost": 4000
        },
        {
          "duration": 18,
          "cost": 3200
        },
        {
          "duration": 24,
          "cost": 1800
        },
        {
          "duration": 24,
          "cost": 1800
        },
        {
          "duration": 24,
          "cost": 1800
        }
      ]
    },
    {
      "id": 14,
      "depends": [
        4,
        10
      ],
      "options": [
        {
          "duration": 9,
          "cost": 3000
        },
        {
          "duration": 15,
          "cost": 2400
        },
        {
          "duration": 18,
          "cost": 2200
        },
        {
          "duration": 18,
          "cost": 2200
        },
        {
          "duration": 18,
          "cost": 2200
        }
      ]
    },
    {
      "id": 15,
      "depends": [
        12
      ],
      "options": [
        {
          "duration": 12,
          "cost": 4500
        },
        {
          "duration": 16,
          "cost": 3500
        },
        {
          "duration": 16,
          "cost": 3500
        },
        {
          "duration": 16,
          "cost": 3500
        },
        {
          "duration": 16,
          "cost": 3500
        }
      ]
    },
    {
      "id": 16,
      "depends": [
        13,
        14
      ],
      "options": [
        {
          "duration": 20,
          "cost": 3000
        },
        {
          "duration": 22,
          "cost": 2000
        },
        {
          "duration": 24,
          "cost": 1750
        },
        {
          "duration": 28,
          "cost": 1500
        },
        {
          "duration": 30,
          "cost": 1000
        }
      ]
    },
    {
      "id": 17,
      "depends": [
        11,
        14,
        15
      ],
      "options": [
        {
          "duration": 14,
          "cost": 4000
        },
        {
          "duration": 18,
          "cost": 3200
        },
        {
          "duration": 24,
          "cost": 1800
        },
        {
          "duration": 24,
          "cost": 1800
        },
        {
          "duration": 24,
          "cost": 1800
        }
      ]
    },
    {
      "id": 18,
      "depends": [
        16,
        17
      ],
      "options": [
        {
          "duration": 9,
          "cost": 3000
        },
        {
          "duration": 15,
          "cost": 2400
        },
        {
          "duration": 18,
          "cost": 2200
        },
        {
          "duration": 18,
          "cost": 2200
        },
        {
          "duration": 18,
          "cost": 2200
        }
      ]
    }
  ]
})json";

}  // namespace

const std::vector<BundledInstance>& bundled_instances() {
  static const std::vector<BundledInstance> catalogue{
      {"table1", kAoaFormat, 17,
       "17-arc activity-on-arrow network, unit resource demand, published ES/EF/LS/LF/TF reference table", kTable1},
      {"table2", kTctpFormat, 18,
       "18-activity time-cost trade-off instance, 5 options each, published option table and totals", kTable2},
  };
  return catalogue;
}

const BundledInstance* find_bundled(std::string_view name) {
  for (const auto& b : bundled_instances())
    if (b.name == name) return &b;
  return nullptr;
}

}  // namespace metasched
