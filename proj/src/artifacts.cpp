#include "mmlint/artifacts.hpp"

#include <map>
#include <set>
#include <utility>

#include "mmlint/errors.hpp"

namespace mmlint {

std::vector<Epic> collect_epics(const std::vector<UserStory>& stories) {
  std::vector<Epic> epics;
  std::map<std::string, std::size_t> index;
  for (const UserStory& story : stories) {
    std::string name = story.epic.value_or(std::string(kUnassignedEpic));
    auto [it, inserted] = index.try_emplace(name, epics.size());
    if (inserted) epics.push_back(Epic{name, {}, std::nullopt});
    epics[it->second].stories.push_back(story.id);
  }
  return epics;
}

ArtifactBundle make_bundle(MotivationalModel model, std::vector<Persona> personas,
                           std::vector<UserStory> stories, AliasTable aliases) {
  std::set<std::string> persona_ids;
  for (const Persona& persona : personas) {
    if (!persona_ids.insert(persona.id).second) {
      throw Error("duplicate persona id \"" + persona.id + "\"");
    }
  }
  std::set<std::string> story_ids;
  for (const UserStory& story : stories) {
    if (!story_ids.insert(story.id).second) {
      int line = story.source_location ? story.source_location->line : 0;
      std::string file = story.source_location ? story.source_location->file : "";
      throw DuplicateStoryIdError(file, line, story.id);
    }
  }
  ArtifactBundle bundle{std::move(model), std::move(personas), std::move(stories), {},
                        std::move(aliases)};
  bundle.epics = collect_epics(bundle.stories);
  return bundle;
}

}  // namespace mmlint
