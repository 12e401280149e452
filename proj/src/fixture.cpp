#include "ppco/fixture.hpp"

namespace ppco {

namespace {

// The corpus dates are EET (UTC+2) display strings; the epoch keeps UTC.
Timestamp eet(const std::string& display, int hour, int minute, int second) {
    return Timestamp{utc_epoch(2005, 11, 12, hour, minute, second) - 7200, display};
}

ArtifactNode component(const std::string& id, const std::string& name,
                       const std::string& properties, const std::string& description,
                       const std::string& created_by, const std::string& time_display,
                       int hour, int minute, int second, std::int64_t type_code) {
    ArtifactNode node;
    node.id = id;
    node.name = name;
    node.class_name = "ARTIFACT";
    node.properties_ref = properties;
    node.methods_ref = "No methods";
    node.documentation_ref = "No documentation";
    node.description = description;
    node.created_by = created_by;
    node.creation_date = eet(time_display, hour, minute, second);
    node.last_update_by = created_by;
    node.last_update_date = node.creation_date;
    node.type_code = type_code;
    return node;
}

}  // namespace

Snapshot load_cyclone_fixture() {
    Snapshot snap;
    Store& store = snap.store;
    snap.drp_schema_location = "C:\\DRP\\drp-schema.xsd";

    // -- product structure: root + 18 components --

    ArtifactNode root;
    root.id = "381009";
    root.name = "Cyclone Vessel";
    root.class_name = "ARTIFACT";
    root.properties_ref = "See Properties N\u00b0 PR012";
    root.methods_ref = "See Methods N\u00b0MT002";
    root.documentation_ref = "See Documentation N\u00b0DOC055";
    root.description = "Industrial Closed Cyclone vessel";
    root.created_by = "Michel";
    root.creation_date = eet("Sat Nov 12 07:34:44 EET 2005", 7, 34, 44);
    root.last_update_by = "Michel";
    root.last_update_date = root.creation_date;
    root.type_code = -732469182;
    root.is_complete = false;
    store.add_artifact(root);

    ArtifactNode body = component("3011010", "CP Vessel Body", "316L Stainless Steel",
                                  "Gudgeon Pin Group 1 debug", "Jean",
                                  "Sat Nov 12 07:32:27 EET 2005", 7, 32, 27, -732469187);
    store.add_artifact(body);

    ArtifactNode cover = component("5010120", "CP Vessel Cover",
                                   "316L Stainless Steel with Lifting Eye", "Piston Ring Set",
                                   "Jean", "Sat Nov 12 07:26:12 EET 2005", 7, 26, 12, -732469183);
    store.add_artifact(cover);

    ArtifactNode casket = component(
        "30141280", "Casket 14\" ",
        "Thick Custom cut for 10\" (250 mm) 150# ANSI Flange, Gylon Blue 3504",
        "Sealing casket for the vessel cover flange", "Jean", "Sat Nov 12 07:20:05 EET 2005", 7,
        20, 5, -732469190);
    store.add_artifact(casket);

    struct Minor {
        const char* id;
        const char* name;
        const char* properties;
        const char* description;
        int minute;
        std::int64_t type_code;
    };
    const Minor minors[] = {
        {"3011011", "Barrel Shell", "316L Stainless Steel, rolled plate", "Main cylindrical shell", 2, -732469201},
        {"3011012", "Cone Section", "316L Stainless Steel, pressed cone", "Lower conical section", 3, -732469202},
        {"3011013", "Dust Hopper", "Carbon Steel, epoxy lined", "Particulate collection hopper", 4, -732469203},
        {"3011014", "Inlet Assembly", "Welded duct assembly", "Tangential gas inlet", 5, -732469204},
        {"3011015", "Outlet Assembly", "Welded duct assembly", "Axial gas outlet", 6, -732469205},
        {"3011016", "Support Frame", "S355 structural steel", "Vessel support structure", 7, -732469206},
        {"3011017", "Inlet Duct", "Rectangular duct, 6 mm wall", "Inlet transition duct", 8, -732469207},
        {"3011018", "Inlet Vane", "316L Stainless Steel", "Flow straightening vane", 9, -732469208},
        {"3011019", "Vortex Finder", "316L Stainless Steel tube", "Inner outlet tube", 10, -732469209},
        {"3011020", "Outlet Duct", "Circular duct, 5 mm wall", "Clean gas outlet duct", 11, -732469210},
        {"3011021", "Leg Set", "S355 structural steel", "Three support legs", 12, -732469211},
        {"3011022", "Base Ring", "S355 structural steel", "Anchoring base ring", 13, -732469212},
        {"3011023", "Anchor Bolts", "8.8 grade, M24", "Foundation anchor bolts", 14, -732469213},
        {"5010121", "Lifting Eye", "Forged steel, load rated", "Cover lifting eye", 15, -732469214},
        {"5010122", "Cover Plate", "316L Stainless Steel plate", "Flat cover plate", 16, -732469215},
    };
    for (const auto& m : minors) {
        char display[48];
        std::snprintf(display, sizeof(display), "Sat Nov 12 07:%02d:00 EET 2005", m.minute);
        store.add_artifact(component(m.id, m.name, m.properties, m.description, "Jean", display,
                                     7, m.minute, 0, m.type_code));
    }

    // decomposition; the three named sub-artifacts are the root's direct children
    store.add_assembly_edge("381009", "3011010");
    store.add_assembly_edge("381009", "5010120");
    store.add_assembly_edge("381009", "30141280");
    store.add_assembly_edge("3011010", "3011011");
    store.add_assembly_edge("3011010", "3011012");
    store.add_assembly_edge("3011010", "3011013");
    store.add_assembly_edge("3011010", "3011014");
    store.add_assembly_edge("3011010", "3011015");
    store.add_assembly_edge("3011010", "3011016");
    store.add_assembly_edge("3011014", "3011017");
    store.add_assembly_edge("3011014", "3011018");
    store.add_assembly_edge("3011015", "3011019");
    store.add_assembly_edge("3011015", "3011020");
    store.add_assembly_edge("3011016", "3011021");
    store.add_assembly_edge("3011016", "3011022");
    store.add_assembly_edge("3011016", "3011023");
    store.add_assembly_edge("5010120", "5010121");
    store.add_assembly_edge("5010120", "5010122");

    // 38 interactions, classified as space / energy / material / information
    struct Ia {
        const char* a;
        const char* b;
        InteractionKind kind;
    };
    const auto S = InteractionKind::Space;
    const auto E = InteractionKind::Energy;
    const auto M = InteractionKind::Material;
    const auto I = InteractionKind::Information;
    const Ia interactions[] = {
        {"3011010", "5010120", S}, {"3011010", "30141280", S}, {"5010120", "30141280", S},
        {"3011011", "3011012", S}, {"3011012", "3011013", S},  {"3011011", "3011014", S},
        {"3011011", "3011015", S}, {"3011016", "3011011", S},  {"3011017", "3011018", S},
        {"3011019", "3011020", S}, {"3011021", "3011022", S},  {"3011022", "3011023", S},
        {"5010121", "5010122", S}, {"5010120", "5010122", S},
        {"3011017", "3011011", E}, {"3011011", "3011012", E},  {"3011012", "3011013", E},
        {"3011019", "3011020", E}, {"3011016", "3011021", E},  {"3011010", "3011016", E},
        {"3011018", "3011011", E}, {"3011010", "5010120", E},
        {"3011017", "3011011", M}, {"3011011", "3011012", M},  {"3011012", "3011013", M},
        {"3011019", "3011020", M}, {"3011010", "30141280", M}, {"5010120", "30141280", M},
        {"3011017", "3011018", M}, {"3011011", "3011019", M},  {"5010122", "5010120", M},
        {"3011022", "3011021", M},
        {"3011010", "5010120", I}, {"3011016", "3011023", I},  {"5010121", "5010120", I},
        {"3011019", "5010120", I}, {"3011017", "5010120", I},  {"3011021", "3011023", I},
    };
    for (const auto& ia : interactions) store.add_interaction(ia.a, ia.b, ia.kind);

    // batch content records
    store.add_batch_item({"F01", "381009", BatchItemCategory::Function,
                          "Separate particulate matter from the process gas stream"});
    store.add_batch_item({"F02", "3011010", BatchItemCategory::Function,
                          "Generate the cyclonic flow field"});
    store.add_batch_item({"B01", "381009", BatchItemCategory::Behavior,
                          "Pressure drop rises with the square of the inlet velocity"});
    store.add_batch_item({"FL01", "381009", BatchItemCategory::Flow,
                          "Gas stream: inlet duct to outlet duct via the barrel"});
    store.add_batch_item({"G01", "381009", BatchItemCategory::Geometry, "CAD model CAD-381009"});
    store.add_batch_item({"C01", "381009", BatchItemCategory::Constraint,
                          "Flange bolt circle must match the 150# ANSI pattern"});
    store.add_batch_item({"R01", "381009", BatchItemCategory::Requirement,
                          "Collection efficiency above 95% for particles over 10 microns"});

    // development process; every process has exactly one activity
    store.tasks["T01"] = {"T01", "Geometry layout", "geometry"};
    store.tasks["T02"] = {"T02", "Mechanical sizing", "mechanic"};
    store.tasks["T03"] = {"T03", "Structural check", "simulation"};
    store.tasks["T04"] = {"T04", "Collect customer requirements", "design"};
    store.activities["ACT01"] = {"ACT01", "Layout study", {"T01", "T02", "T03"}};
    store.activities["ACT02"] = {"ACT02", "Requirement analysis", {"T04"}};
    store.processes["PR01"] = {"PR01", "Feasible layout determination", {"ACT01"}};
    store.processes["PR02"] = {"PR02", "Customer requirements capture", {"ACT02"}};
    store.info_flows.push_back({"T01", "T02", "Envelope geometry"});
    store.info_flows.push_back({"T02", "T03", "Load cases and sections"});

    // supply-chain organization: 3 teams, each responsible for a major component
    store.teams["TM1"] = {"TM1", "Vessel Body Team", "3011010", {"Michel", "ActorX"}};
    store.teams["TM2"] = {"TM2", "Vessel Cover Team", "5010120", {"Jean"}};
    store.teams["TM3"] = {"TM3", "Sealing Team", "30141280", {"ActorY"}};
    store.actors["Michel"] = {"Michel", "Michel", "senior product architect", "TM1"};
    store.actors["Jean"] = {"Jean", "Jean", "designer", "TM2"};
    store.actors["ActorX"] = {"ActorX", "ActorX", "external designer", "TM1"};
    store.actors["ActorY"] = {"ActorY", "ActorY", "external calculation engineer", "TM3"};
    store.competences.push_back({"Michel", "design", 3});
    store.competences.push_back({"Jean", "manufacturing", 2});
    store.competences.push_back({"ActorX", "geometry", 3});
    store.competences.push_back({"ActorX", "mechanic", 2});
    store.competences.push_back({"ActorY", "simulation", 2});
    store.add_team_interaction("TM1", "TM2", 5);
    store.add_team_interaction("TM1", "TM3", 2);
    store.add_team_interaction("TM2", "TM3", 3);

    // viewpoints
    snap.catalog.add_viewpoint({"VP01", "ActorX", "shape global design", "geometry", 3,
                                {"381009"},
                                {"shape global design", "ACT01", "geometry"}});
    snap.catalog.add_viewpoint({"VP02", "ActorX", "mechanical design", "mechanic", 2,
                                {"381009"},
                                {"mechanical design", "ACT01", "mechanic"}});
    snap.catalog.add_viewpoint({"VP03", "ActorY", "structural simulation", "simulation", 2,
                                {"381009"},
                                {"structural simulation", "ACT01", "simulation"}});
    snap.catalog.add_viewpoint({"VP04", "Michel", "product architecture", "design", 3,
                                {"381009"},
                                {"product architecture", "ACT02", "design"}});
    snap.catalog.add_relationship("VP01", "VP02", "same actor, shared cyclone vessel context");

    // batch access profiles
    snap.catalog.profiles.register_profile(
        "geometry", 3,
        {
            {"Artifact", 1, "Standard Information about the product"},
            {"Function", 2, "Different function of the final-product and sub-artifact"},
            {"Behavior", 2,
             "Different behaviors of the final-product and sub-artifact in relation with their "
             "respective functions"},
            {"Flows", 2, "Different flows of the final-product functions"},
            {"Geometry-Form", 1, "All information about the detailed-geometry with a CAD model"},
            {"Sub-Artifact", 2,
             "Different information about the second level of direct-component assembly"},
            {"Assembly", 2, "The relationship with Sub-Artifacts"},
            {"Constraints", 1, "All constraints of the product (design, assembly...)"},
            {"Requirements", 2,
             "Requirements about the product and different phases of its lifecycle"},
            {"Group", 1, "All information about actors of collaboration-team"},
        });
    snap.catalog.profiles.register_profile(
        "mechanic", 2,
        {
            {"Mechanic", 1,
             "All information about the mechanic application of the product (see activity of VP09 "
             "and VP08)"},
            {"Artifact", 2, "Standard Information about the product"},
            {"Function", 2, "Different function of the final-product and sub-artifact"},
            {"Behavior", 2,
             "Different behaviors of the final-product and sub-artifact in relation with their "
             "respective functions"},
            {"Flows", 3, "Different flows of the final-product functions"},
            {"Geometry-Form", 2, "Different information about the geometry with a CAD model"},
            {"Sub-Artifact", 3,
             "Different information about the first level of direct-component assembly"},
            {"Assembly", 3, "The relationship with Sub-Artifacts"},
            {"Constraints", 1, "All constraints design of the product"},
            {"Requirements", 3,
             "Requirements about the product and different phases of its lifecycle"},
            {"Group", 1, "All information about the actors in the group"},
        });
    snap.catalog.profiles.register_profile(
        "simulation", 2,
        {
            {"Mechanic", 2, "Mechanic application summary"},
            {"Behavior", 1, "All behaviors relevant to structural simulation"},
            {"Geometry-Form", 2, "Different information about the geometry with a CAD model"},
            {"Constraints", 2, "Design constraints affecting structural margins"},
            {"Requirements", 2,
             "Requirements about the product and different phases of its lifecycle"},
            {"Group", 1, "All information about the actors in the group"},
        });
    snap.catalog.profiles.register_profile(
        "design", 3,
        {
            {"Artifact", 1, "Standard Information about the product"},
            {"Function", 1, "All functions of the final-product and sub-artifact"},
            {"Sub-Artifact", 1, "All information about direct-component assembly"},
            {"Assembly", 1, "The relationship with Sub-Artifacts"},
            {"Constraints", 1, "All constraints of the product (design, assembly...)"},
            {"Requirements", 1, "All requirements about the product"},
            {"Group", 1, "All information about actors of collaboration-team"},
        });

    snap.validate();
    return snap;
}

}  // namespace ppco
