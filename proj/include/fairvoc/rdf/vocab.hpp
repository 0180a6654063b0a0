#pragma once

#include <string_view>

// Namespace IRIs and the handful of terms referenced by name across modules.
namespace fairvoc::vocab {

inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kDcterms = "http://purl.org/dc/terms/";
inline constexpr std::string_view kVann = "http://purl.org/vocab/vann/";
inline constexpr std::string_view kBibo = "http://purl.org/ontology/bibo/";
inline constexpr std::string_view kFoaf = "http://xmlns.com/foaf/0.1/";
inline constexpr std::string_view kSw = "http://www.w3.org/2003/06/sw-vocab-status/ns#";
inline constexpr std::string_view kVaem = "http://www.linkedmodel.org/schema/vaem#";
inline constexpr std::string_view kSchema = "http://schema.org/";
inline constexpr std::string_view kSchemaHttps = "https://schema.org/";

inline constexpr std::string_view kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view kRdfFirst = "http://www.w3.org/1999/02/22-rdf-syntax-ns#first";
inline constexpr std::string_view kRdfRest = "http://www.w3.org/1999/02/22-rdf-syntax-ns#rest";
inline constexpr std::string_view kRdfNil = "http://www.w3.org/1999/02/22-rdf-syntax-ns#nil";
inline constexpr std::string_view kRdfLangString =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";
inline constexpr std::string_view kXsdString = "http://www.w3.org/2001/XMLSchema#string";

inline constexpr std::string_view kOwlOntology = "http://www.w3.org/2002/07/owl#Ontology";
inline constexpr std::string_view kOwlImports = "http://www.w3.org/2002/07/owl#imports";
inline constexpr std::string_view kOwlVersionIri = "http://www.w3.org/2002/07/owl#versionIRI";
inline constexpr std::string_view kOwlVersionInfo = "http://www.w3.org/2002/07/owl#versionInfo";
inline constexpr std::string_view kOwlPriorVersion = "http://www.w3.org/2002/07/owl#priorVersion";

inline constexpr std::string_view kRdfsLabel = "http://www.w3.org/2000/01/rdf-schema#label";
inline constexpr std::string_view kRdfsComment = "http://www.w3.org/2000/01/rdf-schema#comment";

}  // namespace fairvoc::vocab
