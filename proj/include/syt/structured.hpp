#pragma once

// JSON interchange for tableaux, decks and census reports.

#include <json.hpp>

#include "syt/census.hpp"
#include "syt/jeu_de_taquin.hpp"
#include "syt/tableau.hpp"

namespace syt {

/// {"shape": [...], "rows": [[...], ...]}
nlohmann::json to_json(const StandardTableau& t);

/// Validates the rows and checks that `shape`, when present, matches them.
StandardTableau tableau_from_json(const nlohmann::json& j);

/// {"k": k, "n": n, "members": [tableau, ...]}
nlohmann::json to_json(const Deck& d);
/// {"k": k, "n": n, "cards": [{"tableau": ..., "multiplicity": m}, ...]}
nlohmann::json to_json(const DeckMultiset& d);

/// {"n", "k", "mode", "total", "classes": [[tableau, ...], ...]}
nlohmann::json to_json(const CensusReport& r);

}  // namespace syt
